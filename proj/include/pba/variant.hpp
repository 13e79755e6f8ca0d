#pragma once

#include <string>

namespace pba {

enum class AlgorithmVariant {
    SocialLearning,   // bisect/update, then weighted log-belief averaging
    NoCollaboration,  // bisect/update only
    LinearConsensus,  // bisect/update, then arithmetic belief mixing
};

// What an experiment runs: one variant, or all three on shared seeds.
enum class VariantSelection {
    SocialLearning,
    NoCollaboration,
    LinearConsensus,
    All,
};

// Names used on the command line and in CSV output: "social", "no-collab",
// "linear" (and "all" for selections).
std::string to_string(AlgorithmVariant variant);
std::string to_string(VariantSelection selection);
VariantSelection parse_variant(const std::string& name);

}  // namespace pba
