#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "schubert/decomposition.hpp"

// Multiplicity-freeness classifiers. The closed-form certification covers
// small block counts (at most 2, or 3 when the last entry stays below N);
// everything else gets a bounded-degree empirical scan that is reported as
// evidence, never as a certificate.

namespace schubert {

// w = (1..p, m+1..m+i) with p+i = d and m != p. The top element is
// (0, N-d, d); the bottom element degenerates to (d, 0, 0).
struct SmoothForm {
    int p = 0;
    int m = 0;
    int i = 0;

    bool operator==(const SmoothForm&) const = default;
};

enum class Verdict { multiplicity_free_certified, not_covered };

struct EmpiricalResult {
    int max_degree_checked = 0;
    bool multiplicity_free = true;
    // first (degree, label) whose aggregate multiplicity exceeds 1
    std::optional<std::pair<int, IrreducibleLabel>> first_violation;

    bool operator==(const EmpiricalResult&) const = default;
};

struct SphericityVerdict {
    Word w;
    std::optional<SmoothForm> smooth_form;
    std::optional<int> determinantal_form;  // the parameter t
    int block_count = 0;                    // blocks of the full stabilizer Levi
    bool last_entry_is_N = false;
    Verdict theorem_verdict = Verdict::not_covered;
    std::optional<EmpiricalResult> empirical;

    bool operator==(const SphericityVerdict&) const = default;
};

// Matches w against the identity-prefix + consecutive-suffix pattern.
std::optional<SmoothForm> smooth_form(const SchubertContext& ctx);

// Matches w = (t+1..d, N-t+1..N) for some 1 <= t < min(d, N-d).
std::optional<int> determinantal_parameter(const SchubertContext& ctx);

// Structural classification only; the empirical field is left empty.
// Certification: block_count <= 2, or block_count == 3 with w_d != N.
SphericityVerdict classify(const SchubertContext& ctx);

// Decomposes each degree r <= max_degree and aggregates constituent
// multiplicities per degree; distinct degrees can never share a label
// because the total box count rd recovers r.
EmpiricalResult empirical_multiplicity_check(const LeviContext& levi, int max_degree);

// One verdict per w in I_{d,N} (lexicographic), each with the empirical
// check run against the full stabilizer Levi. A certified verdict with a
// failing empirical check is a broken invariant: std::logic_error.
std::vector<SphericityVerdict> scan(int N, int d, int max_degree);

}  // namespace schubert
