#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpa/analysis.hpp"
#include "lpa/element.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// Outcome of one brute-force check. Empty failures means pass; every
/// failure string carries the inputs needed to replay it (the seed is in
/// the report).
struct VerificationReport {
    std::string check;
    std::string graph_id;
    long long trials = 0;
    std::vector<std::string> failures;
    std::uint64_t seed = 0;
    long long millis = 0;

    bool passed() const { return failures.empty(); }
};

/// splitmix64: fixed, platform-independent stream so every randomized
/// check replays from (seed, trials) alone.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    int in_range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

/// Fixed sampling distribution for identity refutation: up to 4 terms,
/// nonzero coefficients in {-2..2}, real and ghost parts are random walks
/// of length at most 3. Identities are universally quantified, so any
/// distribution is sound for refutation; small supports keep normal forms
/// small.
Element random_element(const Graph& g, Rng& rng);

/// Relations (1)-(4) as normal-form identities, exhaustively over all
/// vertices and edges. CK-2 is only checked at regular vertices.
VerificationReport verify_ck_relations(const Graph& g, const std::string& graph_id);

/// S_{2d} = 0 on random tuples, d = check_pi bound (requires is_pi and
/// 2d <= 8). With forced_d the precondition is skipped and the first tuple
/// is the designated witness (e1, e1^, e2, e2^, ...) -- the negative
/// control that must fail on non-PI graphs.
VerificationReport verify_standard_identity(const Graph& g, const std::string& graph_id,
                                            int trials, std::uint64_t seed,
                                            std::optional<int> forced_d = std::nullopt);

/// Full delta-relation tables for every block of decompose(g), cross-block
/// orthogonality, shift invertibility on Laurent blocks, and completeness
/// (block identities sum to 1).
VerificationReport verify_matrix_units(const Graph& g, const std::string& graph_id);

/// For every no-exit cycle rotation c and small powers: with u the sum of
/// the other vertices, (u + c^)(u + c) = 1 and (u + c)(u + c^) = 1. For
/// every cycle with an exit at w: exhibits w - cc^ != 0 together with the
/// killed exit edge (c^ f = 0, f != 0), the obstruction to transfer.
VerificationReport verify_invertibility_transfer(const Graph& g,
                                                 const std::string& graph_id,
                                                 int trials);

/// Exact rank of {c^i (c^)^j : i+j <= n} for a cycle c with an exit,
/// rebased at an exit vertex; must be the full (n+1)(n+2)/2. Throws when
/// the cycle has no exit (the set collapses) or n exceeds the cap.
VerificationReport verify_cycle_independence(const Graph& g, const std::string& graph_id,
                                             const Cycle& c, int n, int cap = 8);

/// estimate_gk(growth_series(g, n)) agrees with classify_gk(g); n >= 6.
VerificationReport verify_growth_matches_class(const Graph& g,
                                               const std::string& graph_id, int n);

}  // namespace lpa
