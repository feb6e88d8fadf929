#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hit {

enum class FieldFlag { Q, General };
enum class RingFlag { Z, General };
enum class VerdictStatus { Finite, InfiniteWitness, Inconclusive };

std::string to_string(FieldFlag f);
std::string to_string(RingFlag r);
std::string to_string(VerdictStatus s);
FieldFlag parse_field_flag(const std::string& s);
RingFlag parse_ring_flag(const std::string& s);

struct FiredCriterion {
    std::string criterion;  // e.g. "primitive_cf"
    std::string tag;        // theorem tag, e.g. "T:main"
    std::string reason;
};

// Structured evidence that Red_f(R) is infinite, or other attached data.
struct Witness {
    std::string kind;
    std::string description;
    std::vector<std::pair<std::string, std::string>> data;
};

// A hypothetical coset action A/A_z at infinity and whether it survives.
struct CandidateConfig {
    std::string subgroup;  // how A_z was obtained
    std::uint64_t index = 0;
    std::vector<int> sigma_cycles;
    bool survives = false;
    std::vector<std::string> failed;  // ids of failed conditions
};

struct Verdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    std::vector<FiredCriterion> fired;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;
    std::vector<CandidateConfig> candidates;

    bool cites(const std::string& tag) const;
    // Finite needs a fired criterion, InfiniteWitness needs a witness.
    // Throws InvariantViolation otherwise.
    void check() const;
    std::string report() const;
};

}  // namespace hit
