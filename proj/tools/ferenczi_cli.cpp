#include "ferenczi/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

constexpr const char* kVersion = "0.1.0";

using ferenczi::Json;

struct Options {
  std::string preset;
  std::vector<std::string> preset_params;
  std::string schedule_file;
  std::string format = "text";
  long long level = 2;
  long long length = 8;
  std::string position = "0";
  long long target_level = 1;
  long long ambient_level = 2;
  long long depth = 3;
  long long max_level = 12;
  std::string alpha = "0";
  std::string alpha_error = "0";
  std::string cylinder;
  std::string width = "1/10000";
  long long from_level = -1;
  long long to_level = -1;
  std::string data_file;
};

ferenczi::ParameterSchedule load_schedule(const Options& opt, Json& echo,
                                          std::vector<std::string>& notes) {
  std::optional<ferenczi::ParameterSchedule> schedule;
  if (!opt.preset.empty()) {
    std::map<std::string, long long> params;
    for (const auto& kv : opt.preset_params) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw ferenczi::ValidationError("preset parameter must look like key=value: " + kv);
      params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
    }
    schedule = ferenczi::preset(opt.preset, params).schedule;
    echo["preset"] = opt.preset;
  } else if (!opt.schedule_file.empty()) {
    std::ifstream in(opt.schedule_file);
    if (!in) throw ferenczi::ValidationError("cannot open schedule file " + opt.schedule_file);
    Json j;
    in >> j;
    schedule = ferenczi::schedule_from_json(j);
    echo["schedule_file"] = opt.schedule_file;
  } else {
    throw ferenczi::ValidationError("pass --preset NAME or --schedule FILE");
  }
  if (!schedule->standard()) {
    schedule = ferenczi::standardize(*schedule);
    notes.push_back(
        "schedule standardized on load (stages with q_n = 1 merged with their successor; "
        "same subshift, re-indexed levels)");
  }
  echo["schedule"] = ferenczi::schedule_to_json(*schedule);
  return *schedule;
}

std::optional<ferenczi::KnownMeasurableEigenvalue> preset_annotation(const Options& opt) {
  if (opt.preset.empty()) return std::nullopt;
  return ferenczi::preset(opt.preset).known_measurable;
}

void print_human(const Json& report) {
  const Json& results = report.at("results");
  std::cout << report.at("command").get<std::string>() << " results:\n";
  std::cout << results.dump(2) << "\n";
  if (report.contains("notes"))
    for (const auto& n : report.at("notes")) std::cout << "note: " << n.get<std::string>() << "\n";
  std::cout << "citations:";
  for (const auto& c : report.at("citations")) std::cout << " " << c.get<std::string>();
  std::cout << "\n";
}

int emit(const Options& opt, Json report) {
  if (opt.format == "json")
    std::cout << report.dump(2) << std::endl;
  else
    print_human(report);
  return 0;
}

Json make_report(const std::string& command, Json echo, Json results,
                 std::vector<std::string> citations, std::vector<std::string> notes,
                 std::chrono::steady_clock::time_point started) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  Json report{{"command", command},
              {"options", std::move(echo)},
              {"results", std::move(results)},
              {"citations", citations},
              {"timing_ms", elapsed},
              {"version", kVersion}};
  if (!notes.empty()) report["notes"] = notes;
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of minimal rank-one (Ferenczi) subshifts"};
  app.require_subcommand(1);

  Options opt;
  std::string command;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--preset", opt.preset, "named example schedule");
    sub->add_option("--param", opt.preset_params, "preset parameter key=value (repeatable)");
    sub->add_option("--schedule", opt.schedule_file, "schedule JSON file");
    sub->add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->callback([&, sub] { command = sub->get_name(); });
  };

  auto* words = app.add_subcommand("words", "generating word w_n");
  words->add_option("--level", opt.level, "word level n");
  add_common(words);

  auto* language = app.add_subcommand("language", "the words of length l in the subshift");
  language->add_option("--length", opt.length, "factor length l");
  add_common(language);

  auto* locate = app.add_subcommand("locate", "tower address of a position in w_N");
  locate->add_option("--position", opt.position, "position j (decimal)");
  locate->add_option("--target-level", opt.target_level, "lowest level to decode to");
  locate->add_option("--ambient-level", opt.ambient_level, "level N of the ambient word");
  add_common(locate);

  auto* tail = app.add_subcommand("tail", "common right tail of the asymptotic class");
  tail->add_option("--length", opt.length, "tail prefix length");
  add_common(tail);

  auto* matrices = app.add_subcommand("matrices", "composition matrices and closed-form products");
  matrices->add_option("--level", opt.level, "morphism level n");
  matrices->add_option("--from", opt.from_level, "product start level m");
  matrices->add_option("--to", opt.to_level, "product end level n");
  add_common(matrices);

  auto* heights = app.add_subcommand("heights", "tower height vector h_n");
  heights->add_option("--level", opt.level, "level n");
  add_common(heights);

  auto* measure = app.add_subcommand("measure", "invariant measure vectors and cylinder brackets");
  measure->add_option("--level", opt.level, "level m");
  measure->add_option("--cylinder", opt.cylinder, "cylinder word over {0,1}");
  measure->add_option("--width", opt.width, "requested bracket width (rational)");
  add_common(measure);

  auto* rank = app.add_subcommand("rank", "exact-finite-rank classification");
  add_common(rank);

  auto* spectra = app.add_subcommand("spectra", "continuous eigenvalues and mixing properties");
  spectra->add_option("--depth", opt.depth, "non-mixing sample depth");
  add_common(spectra);

  auto* veech = app.add_subcommand("veech", "necessary condition ||alpha h_n|| -> 0");
  veech->add_option("--alpha", opt.alpha, "alpha as a rational p/q");
  veech->add_option("--alpha-error", opt.alpha_error,
                    "certified bound |alpha - p/q| for inexact alpha");
  veech->add_option("--max-level", opt.max_level, "levels to tabulate");
  add_common(veech);

  auto* mixing = app.add_subcommand("mixing", "non-mixing certificate");
  mixing->add_option("--depth", opt.depth, "sample depth k_max");
  add_common(mixing);

  auto* dimgroup = app.add_subcommand("dimgroup", "dimension group descriptor");
  add_common(dimgroup);

  auto* oe = app.add_subcommand("oe", "orbit equivalence invariant J_W");
  add_common(oe);

  auto* realize = app.add_subcommand("realize", "schedule from Ferenczi-type dimension group data");
  realize->add_option("--data", opt.data_file, "JSON file with z, v, w, r_period")->required();
  realize->add_option("--format", opt.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  realize->callback([&] { command = "realize"; });

  auto* presets_cmd = app.add_subcommand("presets", "list named example schedules");
  presets_cmd->add_option("--format", opt.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  presets_cmd->callback([&] { command = "presets"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    Json echo, results;
    std::vector<std::string> citations, notes;

    if (command == "presets") {
      Json list = Json::array();
      for (const auto& name : ferenczi::preset_names()) {
        const auto p = ferenczi::preset(name);
        list.push_back(Json{{"name", p.name}, {"description", p.description}});
      }
      results["presets"] = list;
      citations = {"worked-example-schedules"};
      return emit(opt, make_report(command, echo, results, citations, notes, started));
    }
    if (command == "realize") {
      std::ifstream in(opt.data_file);
      if (!in) throw ferenczi::ValidationError("cannot open data file " + opt.data_file);
      Json j;
      in >> j;
      const auto data = ferenczi::ferenczi_type_data_from_json(j);
      results = ferenczi::realize_result_to_json(ferenczi::realize(data));
      citations = {"ferenczi-type-realization-base-expansion"};
      return emit(opt, make_report(command, echo, results, citations, notes, started));
    }

    const ferenczi::ParameterSchedule schedule = load_schedule(opt, echo, notes);
    ferenczi::GeneratingWords words_view(schedule);

    if (command == "words") {
      results["level"] = opt.level;
      results["length"] = words_view.length(opt.level).str();
      results["word"] = words_view.word(opt.level);
      citations = {"generating-word-recursion"};
    } else if (command == "language") {
      results = ferenczi::factor_set_to_json(ferenczi::language(words_view, opt.length));
      const auto [a_n, b_n] = ferenczi::factor_stats(words_view, opt.length);
      results["min_zeros"] = a_n.str();
      results["max_zeros"] = b_n.str();
      citations = {"language-extraction-from-generating-words"};
    } else if (command == "locate") {
      const auto addresses = ferenczi::locate(words_view, ferenczi::BigInt(opt.position),
                                              opt.target_level, opt.ambient_level);
      Json list = Json::array();
      for (const auto& a : addresses) list.push_back(ferenczi::tower_address_to_json(a));
      results["addresses"] = list;
      notes.push_back(
          "addresses follow the natural decomposition of w_{m+1} into w_m copies, not the "
          "rotated proper towers");
      citations = {"tower-address-recognizability"};
    } else if (command == "tail") {
      results["tail"] = ferenczi::asymptotic_tail(words_view, opt.length);
      citations = {"asymptotic-tail-recursion", "unique-asymptotic-class"};
    } else if (command == "matrices") {
      ferenczi::DirectiveSequence seq(schedule, ferenczi::Variant::Proper);
      results["level"] = opt.level;
      results["morphism"] = ferenczi::morphism_to_json(seq.level(opt.level));
      results["composition_matrix"] =
          ferenczi::matrix_to_json(composition_matrix(seq.level(opt.level)));
      if (opt.from_level >= 0 && opt.to_level > opt.from_level) {
        results["product"] = ferenczi::matrix_to_json(
            ferenczi::product_closed_form(schedule, opt.from_level, opt.to_level));
        results["inverse"] = ferenczi::matrix_to_json(
            ferenczi::inverse_closed_form(schedule, opt.from_level, opt.to_level));
      }
      citations = {"composition-matrix-closed-form"};
    } else if (command == "heights") {
      results["heights"] = ferenczi::rational_vector_to_json(ferenczi::heights(schedule, opt.level));
      citations = {"height-formula-spacer-plus-length"};
    } else if (command == "measure") {
      const auto mu = ferenczi::measure_vector(schedule, opt.level);
      results["level"] = mu.level;
      results["measure_vector"] = ferenczi::interval_vector_to_json(mu.values);
      results["tower_masses"] =
          ferenczi::interval_vector_to_json(ferenczi::tower_masses(schedule, opt.level));
      if (!opt.cylinder.empty())
        results["cylinder"] = ferenczi::interval_to_json(ferenczi::cylinder_measure(
            schedule, opt.cylinder, ferenczi::rational_from_string(opt.width)));
      citations = {"unique-ergodicity-measure-vectors"};
    } else if (command == "rank") {
      results = ferenczi::rank_report_to_json(ferenczi::rank_report(schedule));
      citations = {"exact-finite-rank-criterion"};
    } else if (command == "spectra") {
      results["continuous"] =
          ferenczi::eigenvalue_report_to_json(ferenczi::continuous_eigenvalues(schedule));
      const auto factor = ferenczi::max_equicontinuous_factor(schedule);
      results["max_equicontinuous_factor"] =
          Json{{"q_max", factor.q_max}, {"description", factor.description}, {"bound", factor.bound}};
      results["mixing"] =
          ferenczi::mixing_certificate_to_json(ferenczi::mixing_certificate(schedule, opt.depth));
      results["measurable"] = ferenczi::measurable_report_to_json(
          ferenczi::measurable_eigenvalue_report(schedule, preset_annotation(opt)));
      {
        ferenczi::DirectiveSequence shifted(schedule, ferenczi::Variant::Shifted);
        Json coincidences = Json::array();
        for (long long n = 1; n <= 3; ++n) {
          const auto c = ferenczi::coincidence_indices(shifted.level(n));
          coincidences.push_back(Json{{"level", n}, {"indices", c}});
        }
        results["induced_toeplitz"] =
            Json{{"note", "the induced system on the level-1 tower base is a Toeplitz subshift "
                          "with discrete spectrum; its odometer base is (Q_{0,n})"},
                 {"shifted_coincidences", coincidences}};
      }
      citations = {"rational-eigenvalue-divisibility", "maximal-equicontinuous-finite-rotation",
                   "non-mixing-spacer-bound", "toeplitz-induced-system"};
    } else if (command == "veech") {
      const ferenczi::AlphaValue alpha{ferenczi::rational_from_string(opt.alpha),
                                       ferenczi::rational_from_string(opt.alpha_error)};
      results = ferenczi::veech_trace_to_json(ferenczi::veech_test(schedule, alpha, opt.max_level));
      citations = {"veech-necessary-condition"};
    } else if (command == "mixing") {
      results =
          ferenczi::mixing_certificate_to_json(ferenczi::mixing_certificate(schedule, opt.depth));
      citations = {"non-mixing-spacer-bound"};
    } else if (command == "dimgroup") {
      results = ferenczi::dimension_group_to_json(ferenczi::dimension_group(schedule));
      citations = {"dimension-group-of-tower-limits", "topological-rank-equals-alphabet-size"};
    } else if (command == "oe") {
      results = ferenczi::orbit_equivalence_to_json(ferenczi::orbit_equivalence(schedule));
      citations = {"orbit-equivalence-infinitesimal-quotient"};
    } else {
      throw ferenczi::DomainError("unknown command");
    }
    return emit(opt, make_report(command, echo, results, citations, notes, started));
  } catch (const ferenczi::FerencziError& e) {
    Json err{{"error", {{"type", "domain"}, {"message", e.what()}}}};
    if (opt.format == "json")
      std::cout << err.dump(2) << std::endl;
    else
      std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
