#include "qbaker/orbit.hpp"

namespace qbaker {

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::QuantumClosedForm: return "quantum-closedform";
        case Provenance::ClassicalTruncated: return "classical-truncated";
        case Provenance::ClassicalExtended: return "classical-extended";
        case Provenance::Oracle: return "oracle";
    }
    return "unknown";
}

}  // namespace qbaker
