#include "pba/variant.hpp"

#include <stdexcept>

namespace pba {

std::string to_string(AlgorithmVariant variant) {
    switch (variant) {
        case AlgorithmVariant::SocialLearning:
            return "social";
        case AlgorithmVariant::NoCollaboration:
            return "no-collab";
        case AlgorithmVariant::LinearConsensus:
            return "linear";
    }
    throw std::logic_error("to_string: unknown variant");
}

std::string to_string(VariantSelection selection) {
    switch (selection) {
        case VariantSelection::SocialLearning:
            return "social";
        case VariantSelection::NoCollaboration:
            return "no-collab";
        case VariantSelection::LinearConsensus:
            return "linear";
        case VariantSelection::All:
            return "all";
    }
    throw std::logic_error("to_string: unknown selection");
}

VariantSelection parse_variant(const std::string& name) {
    if (name == "social") {
        return VariantSelection::SocialLearning;
    }
    if (name == "no-collab") {
        return VariantSelection::NoCollaboration;
    }
    if (name == "linear") {
        return VariantSelection::LinearConsensus;
    }
    if (name == "all") {
        return VariantSelection::All;
    }
    throw std::invalid_argument("unknown variant '" + name +
                                "' (expected social|no-collab|linear|all)");
}

}  // namespace pba
