#include "hit/verdict.hpp"

#include <sstream>

#include "hit/error.hpp"

namespace hit {

std::string to_string(FieldFlag f) { return f == FieldFlag::Q ? "Q" : "general"; }
std::string to_string(RingFlag r) { return r == RingFlag::Z ? "Z" : "general"; }

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Finite: return "Finite";
        case VerdictStatus::InfiniteWitness: return "InfiniteWitness";
        case VerdictStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

FieldFlag parse_field_flag(const std::string& s) {
    if (s == "Q" || s == "q") return FieldFlag::Q;
    if (s == "general") return FieldFlag::General;
    throw InputError("field must be \"Q\" or \"general\", got \"" + s + "\"");
}

RingFlag parse_ring_flag(const std::string& s) {
    if (s == "Z" || s == "z") return RingFlag::Z;
    if (s == "general") return RingFlag::General;
    throw InputError("ring must be \"Z\" or \"general\", got \"" + s + "\"");
}

bool Verdict::cites(const std::string& tag) const {
    for (const auto& f : fired)
        if (f.tag == tag) return true;
    return false;
}

void Verdict::check() const {
    if (status == VerdictStatus::Finite && fired.empty())
        throw InvariantViolation("Finite verdict without a fired criterion");
    if (status == VerdictStatus::InfiniteWitness && witnesses.empty())
        throw InvariantViolation("InfiniteWitness verdict without a witness");
}

std::string Verdict::report() const {
    std::ostringstream os;
    os << "status: " << to_string(status) << '\n';
    for (const auto& f : fired) os << "  fired " << f.criterion << " [" << f.tag << "]: " << f.reason << '\n';
    for (const auto& w : witnesses) {
        os << "  witness " << w.kind << ": " << w.description << '\n';
        for (const auto& [k, v] : w.data) os << "    " << k << " = " << v << '\n';
    }
    for (const auto& n : notes) os << "  note: " << n << '\n';
    for (const auto& c : candidates) {
        os << "  candidate " << c.subgroup << " (index " << c.index << ", sigma cycles";
        for (int l : c.sigma_cycles) os << ' ' << l;
        os << "): " << (c.survives ? "survives" : "excluded");
        for (std::size_t i = 0; i < c.failed.size(); ++i) os << (i ? ", " : " by ") << c.failed[i];
        os << '\n';
    }
    return os.str();
}

}  // namespace hit
