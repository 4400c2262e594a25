#pragma once

#include "ferenczi/schedule.hpp"
#include "ferenczi/spectra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ferenczi {

struct Preset {
  std::string name;
  std::string description;
  ParameterSchedule schedule;
  std::optional<KnownMeasurableEigenvalue> known_measurable;
};

/// Named example schedules shipped with the tool.
std::vector<std::string> preset_names();
Preset preset(const std::string& name,
              const std::map<std::string, long long>& params = {});

/// Reconstructs a named stage rule from its id and serialized parameters.
std::shared_ptr<const NamedStageRule> make_named_rule(
    const std::string& id, const std::map<std::string, long long>& scalars,
    const std::map<std::string, std::vector<Spacer>>& lists);

/// Individual builders (parameterized presets).
ParameterSchedule chacon_schedule();
ParameterSchedule four_letter_schedule(Spacer a = 1, Spacer b = 2, Spacer c = 3, Spacer d = 4);
ParameterSchedule non_exact_rank_schedule();
ParameterSchedule exact_not_lr_schedule();
ParameterSchedule dwmu_one_schedule(Spacer a = 2, Spacer b = 1);
ParameterSchedule measurable_realization_schedule(long long p = 3, long long d = 3,
                                                  long long d_prime = 1);

}  // namespace ferenczi
