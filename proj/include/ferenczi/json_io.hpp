#pragma once

#include "ferenczi/dimgroup.hpp"
#include "ferenczi/directive.hpp"
#include "ferenczi/presets.hpp"
#include "ferenczi/spectra.hpp"

#include <json.hpp>

namespace ferenczi {

using Json = nlohmann::json;

/// Schedule file format:
///   {"preperiod": [[0,1],[2,2,4]], "tail": {"periodic": [[0,1]]}}
///   {"preperiod": [], "tail": {"growth": {"cut": {"affine": {"base": 2,
///     "slope": 1}}, "spacer_pattern": [0,1], "stage_prefix": [1]}}}
/// Validation errors name the offending stage index.
ParameterSchedule schedule_from_json(const Json& j);
Json schedule_to_json(const ParameterSchedule& s);

Json rational_to_json(const Rational& r);               // "p/q" string
Json interval_to_json(const RationalInterval& iv);      // "p/q" or ["lo","hi"]
Json interval_vector_to_json(const IntervalVector& v);  // {symbol: value}
Json rational_vector_to_json(const RationalVector& v);
Json matrix_to_json(const RationalMatrix& m);  // labelled rows/cols
Json morphism_to_json(const Morphism& m);      // {"domain": [...], "images": {...}}
Json tail_base_to_json(const TailBase& base);

Json alphabet_tower_to_json(const AlphabetTower& t);
Json rank_report_to_json(const RankReport& r);
Json eigenvalue_report_to_json(const EigenvalueReport& r);
Json mixing_certificate_to_json(const MixingCertificate& c);
Json veech_trace_to_json(const VeechTrace& t);
Json sufficiency_sum_to_json(const SufficiencySum& s);
Json measurable_report_to_json(const MeasurableReport& r);
Json dimension_group_to_json(const DimensionGroupDescriptor& d);
Json orbit_equivalence_to_json(const OrbitEquivalenceDescriptor& o);
Json decode_result_to_json(const DecodeResult& d);
Json factor_set_to_json(const FactorSet& f);
Json tower_address_to_json(const TowerAddress& a);

FerencziTypeData ferenczi_type_data_from_json(const Json& j);
Json realize_result_to_json(const RealizeResult& r);

}  // namespace ferenczi
