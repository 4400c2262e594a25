#include "ferenczi/json_io.hpp"

namespace ferenczi {

namespace {

SpacerStage stage_from_json(const Json& j, long long index) {
  if (!j.is_array()) throw ValidationError("stage must be an array of spacers", index);
  SpacerStage st;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw ValidationError("spacers must be nonnegative integers", index);
    st.spacers.push_back(v.get<Spacer>());
  }
  if (st.spacers.empty()) throw ValidationError("empty stage (q_n = 0 is not allowed)", index);
  return st;
}

CutExpr cut_from_json(const Json& j) {
  CutExpr e;
  if (j.contains("affine")) {
    e.kind = CutExpr::Kind::Affine;
    e.base = j.at("affine").at("base").get<long long>();
    e.step = j.at("affine").value("slope", 0LL);
  } else if (j.contains("exponential")) {
    e.kind = CutExpr::Kind::Exponential;
    e.base = j.at("exponential").at("base").get<long long>();
    e.step = j.at("exponential").value("factor", 2LL);
  } else {
    throw ValidationError("growth cut must be affine or exponential");
  }
  return e;
}

Json cut_to_json(const CutExpr& e) {
  if (e.kind == CutExpr::Kind::Affine)
    return Json{{"affine", {{"base", e.base}, {"slope", e.step}}}};
  return Json{{"exponential", {{"base", e.base}, {"factor", e.step}}}};
}

}  // namespace

ParameterSchedule schedule_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("schedule document must be a JSON object");
  std::vector<SpacerStage> preperiod;
  long long index = 0;
  for (const auto& st : j.value("preperiod", Json::array()))
    preperiod.push_back(stage_from_json(st, index++));

  if (!j.contains("tail")) throw ValidationError("schedule needs a tail");
  const Json& tail = j.at("tail");
  if (tail.contains("periodic")) {
    PeriodicTail p;
    for (const auto& st : tail.at("periodic")) p.period.push_back(stage_from_json(st, index++));
    return ParameterSchedule(std::move(preperiod), std::move(p));
  }
  if (tail.contains("growth")) {
    const Json& g = tail.at("growth");
    GrowthTail growth;
    if (g.contains("named")) {
      const Json& named = g.at("named");
      std::map<std::string, long long> scalars;
      std::map<std::string, std::vector<Spacer>> lists;
      for (const auto& [key, value] : named.at("params").items()) {
        if (value.is_array())
          lists[key] = value.get<std::vector<Spacer>>();
        else
          scalars[key] = value.get<long long>();
      }
      growth.named = make_named_rule(named.at("id").get<std::string>(), scalars, lists);
    } else {
      growth.cut = cut_from_json(g.at("cut"));
      growth.spacers.pattern = g.at("spacer_pattern").get<std::vector<Spacer>>();
      growth.spacers.prefix = g.value("stage_prefix", std::vector<Spacer>{});
    }
    return ParameterSchedule(std::move(preperiod), std::move(growth));
  }
  throw ValidationError("tail must be periodic or growth");
}

Json schedule_to_json(const ParameterSchedule& s) {
  Json j;
  j["preperiod"] = Json::array();
  for (const auto& st : s.preperiod()) j["preperiod"].push_back(st.spacers);
  if (const auto* p = std::get_if<PeriodicTail>(&s.tail())) {
    Json period = Json::array();
    for (const auto& st : p->period) period.push_back(st.spacers);
    j["tail"] = Json{{"periodic", period}};
  } else {
    const auto& g = std::get<GrowthTail>(s.tail());
    Json growth;
    if (g.named) {
      growth["named"] = Json{{"id", g.named->id()}, {"params", Json::parse(g.named->params_json())}};
    } else {
      growth["cut"] = cut_to_json(g.cut);
      growth["spacer_pattern"] = g.spacers.pattern;
      if (!g.spacers.prefix.empty()) growth["stage_prefix"] = g.spacers.prefix;
    }
    j["tail"] = Json{{"growth", growth}};
  }
  return j;
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Json interval_to_json(const RationalInterval& iv) {
  if (iv.exact()) return rational_to_json(iv.lower);
  return Json::array({rational_to_json(iv.lower), rational_to_json(iv.upper)});
}

Json interval_vector_to_json(const IntervalVector& v) {
  Json j = Json::object();
  for (size_t i = 0; i < v.symbols.size(); ++i)
    j[std::to_string(v.symbols[i])] = interval_to_json(v.values[i]);
  return j;
}

Json rational_vector_to_json(const RationalVector& v) {
  Json j = Json::object();
  for (Spacer s : v.symbols()) j[std::to_string(s)] = rational_to_json(v.at(s));
  return j;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array(), cols = Json::array(), entries = Json::array();
  for (Spacer r : m.row_symbols()) rows.push_back(r);
  for (Spacer c : m.col_symbols()) cols.push_back(c);
  for (Spacer r : m.row_symbols()) {
    Json row = Json::array();
    for (Spacer c : m.col_symbols()) row.push_back(rational_to_json(m.at(r, c)));
    entries.push_back(row);
  }
  return Json{{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

Json morphism_to_json(const Morphism& m) {
  Json images = Json::object();
  for (Spacer a : m.domain()) images[std::to_string(a)] = m.image(a);
  return Json{{"domain", m.domain()}, {"codomain", m.codomain()}, {"images", images}};
}

Json tail_base_to_json(const TailBase& base) {
  Json j;
  j["periodic"] = base.periodic;
  auto big_list = [](const std::vector<BigInt>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(x.str());
    return out;
  };
  if (base.periodic) {
    j["preperiod"] = big_list(base.preperiod);
    j["period"] = big_list(base.period);
  }
  j["preview"] = big_list(base.preview);
  return j;
}

Json alphabet_tower_to_json(const AlphabetTower& t) {
  Json j;
  j["stable"] = t.stable;
  j["d"] = t.d;
  j["n0"] = t.n0;
  Json pres = Json::array();
  for (const auto& level : t.prestable) pres.push_back(level);
  j["prestable"] = pres;
  return j;
}

namespace {

const char* verdict_name(LetterVerdict v) {
  switch (v) {
    case LetterVerdict::In: return "in";
    case LetterVerdict::Out: return "out";
    default: return "undetermined";
  }
}

const char* rank_name(RankVerdict v) {
  switch (v) {
    case RankVerdict::Exact: return "exact";
    case RankVerdict::NotExact: return "not-exact";
    default: return "unknown";
  }
}

const char* veech_name(VeechVerdict v) {
  switch (v) {
    case VeechVerdict::Excluded: return "excluded";
    case VeechVerdict::Consistent: return "consistent";
    default: return "inconclusive";
  }
}

}  // namespace

Json rank_report_to_json(const RankReport& r) {
  Json letters = Json::array();
  for (const auto& e : r.letters) {
    Json le{{"letter", e.letter}, {"verdict", verdict_name(e.verdict)}, {"evidence", e.evidence}};
    if (e.lower_bound) le["liminf_lower_bound"] = rational_to_json(*e.lower_bound);
    letters.push_back(le);
  }
  return Json{{"a_mu", r.a_mu},
              {"exact_finite_rank", rank_name(r.exact_finite_rank)},
              {"d_w_mu", r.d_w_mu},
              {"letters", letters}};
}

Json eigenvalue_report_to_json(const EigenvalueReport& r) {
  Json cands = Json::array();
  for (const auto& c : r.candidates)
    cands.push_back(Json{{"q", c.q},
                         {"passes", c.passes},
                         {"witness_level", c.witness_level},
                         {"note", c.note}});
  return Json{{"rational_denominators", r.rational_denominators},
              {"q_max", r.q_max},
              {"weakly_mixing", r.weakly_mixing},
              {"irrational_continuous", r.irrational_continuous},
              {"diff_gcd", r.diff_gcd},
              {"diff_max", r.diff_max},
              {"candidates", cands}};
}

Json mixing_certificate_to_json(const MixingCertificate& c) {
  Json samples = Json::array();
  for (const auto& s : c.samples)
    samples.push_back(Json{{"k", s.k},
                           {"window", s.window.str()},
                           {"min_zeros", s.a_n.str()},
                           {"max_zeros", s.b_n.str()}});
  return Json{{"bound", c.bound},
              {"samples", samples},
              {"samples_truncated", c.samples_truncated},
              {"conclusion", c.conclusion}};
}

Json veech_trace_to_json(const VeechTrace& t) {
  Json table = Json::array();
  for (const auto& e : t.table) {
    Json row{{"level", e.level}, {"letter", e.letter}, {"value", rational_to_json(e.value)}};
    if (e.error != 0) row["error"] = rational_to_json(e.error);
    table.push_back(row);
  }
  Json j{{"alpha", rational_to_json(t.alpha.approx)},
         {"verdict", veech_name(t.verdict)},
         {"witness", t.witness},
         {"tested_letters", t.tested_letters},
         {"table", table}};
  if (t.alpha.error != 0) j["alpha_error"] = rational_to_json(t.alpha.error);
  if (!t.skipped_letters.empty()) {
    j["skipped_letters"] = t.skipped_letters;
    j["warning"] = "letters with undetermined tower mass were excluded from the test";
  }
  return j;
}

Json sufficiency_sum_to_json(const SufficiencySum& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients) coeffs.push_back(c.str());
  return Json{{"modulus", s.modulus},
              {"root_of_unity_coefficients", coeffs},
              {"occurrences", s.occurrences.str()},
              {"magnitude", s.magnitude},
              {"ratio", s.ratio},
              {"error_bound", s.error_bound}};
}

Json measurable_report_to_json(const MeasurableReport& r) {
  Json j;
  j["rank"] = rank_report_to_json(r.rank);
  j["continuous"] = eigenvalue_report_to_json(r.continuous);
  switch (r.scope) {
    case MeasurableReport::Scope::EqualsContinuous:
      j["scope"] = "measurable-equals-continuous";
      break;
    case MeasurableReport::Scope::NoIrrational:
      j["scope"] = "no-irrational-measurable";
      break;
    case MeasurableReport::Scope::IrrationalUndetermined:
      j["scope"] = "irrational-undetermined-open-question";
      break;
    default:
      j["scope"] = "unknown";
  }
  Json cands = Json::array();
  for (const auto& c : r.rational_candidates)
    cands.push_back(Json{{"q", c.q}, {"verdict", veech_name(c.verdict)}, {"note", c.note}});
  j["rational_candidates"] = cands;
  if (r.known)
    j["known_measurable_eigenvalue"] = Json{{"p", r.known->p}, {"description", r.known->description}};
  j["notes"] = r.notes;
  return j;
}

Json dimension_group_to_json(const DimensionGroupDescriptor& d) {
  Json u = Json::object();
  for (const auto& [sym, val] : d.u_w) u[std::to_string(sym)] = val.str();
  return Json{{"a_w", d.a_w},
              {"a_prime", d.a_prime},
              {"b_w", d.b_w},
              {"n0", d.n0},
              {"tail_base", tail_base_to_json(d.tail_base)},
              {"z", interval_vector_to_json(d.z)},
              {"u_w", u},
              {"topological_rank", d.topological_rank},
              {"aperiodicity_certified", d.aperiodicity_certified},
              {"group", "Z^" + std::to_string(d.b_w.size()) + " x Z[(q_n + 1)]"},
              {"cone", "{x : x . z > 0} u {0}"}};
}

Json orbit_equivalence_to_json(const OrbitEquivalenceDescriptor& o) {
  Json gens = Json::array();
  for (const auto& g : o.generators) gens.push_back(interval_to_json(g));
  Json j{{"c", interval_to_json(o.c)},
         {"z_tilde", interval_vector_to_json(o.z_tilde)},
         {"generators", gens},
         {"coset_scale", interval_to_json(o.coset_scale)},
         {"tail_base", tail_base_to_json(o.tail_base)},
         {"exact", o.exact},
         {"unit", "1"},
         {"relation_note", o.relation_note}};
  if (o.rationally_independent) j["rationally_independent"] = *o.rationally_independent;
  return j;
}

Json tower_address_to_json(const TowerAddress& a) {
  Json j{{"level", a.level}, {"offset", a.offset.str()}};
  if (a.kind == TowerAddress::Kind::Copy) {
    j["kind"] = "copy";
    j["copy_index"] = a.index.str();
  } else {
    j["kind"] = "spacer";
    j["gap_index"] = a.index.str();
    j["spacer_value"] = a.spacer_value;
  }
  return j;
}

Json decode_result_to_json(const DecodeResult& d) {
  return Json{{"cut_offset", d.cut_offset.str()}, {"letters", d.letters}};
}

Json factor_set_to_json(const FactorSet& f) {
  Json words = Json::array();
  for (const auto& w : f.words) words.push_back(w);
  return Json{{"length", f.length},
              {"count", f.words.size()},
              {"words", words},
              {"base_level", f.base_level},
              {"spacer_set", std::vector<Spacer>(f.spacer_set.begin(), f.spacer_set.end())}};
}

FerencziTypeData ferenczi_type_data_from_json(const Json& j) {
  FerencziTypeData d;
  for (const auto& [key, val] : j.at("z").items()) {
    d.letters.push_back(key);
    d.z[key] = rational_from_string(val.get<std::string>());
  }
  for (const auto& [key, val] : j.at("v").items()) d.v[key] = val.get<long long>();
  d.w = j.at("w").get<long long>();
  d.r_pre = j.value("r_preperiod", std::vector<long long>{});
  d.r_period = j.at("r_period").get<std::vector<long long>>();
  return d;
}

Json realize_result_to_json(const RealizeResult& r) {
  Json letters = Json::object();
  for (const auto& [b, s] : r.letter_to_spacer) letters[b] = s;
  return Json{{"schedule", schedule_to_json(r.schedule)},
              {"a_prime", r.a_prime},
              {"letters", letters},
              {"notes", r.notes}};
}

}  // namespace ferenczi
