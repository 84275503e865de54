#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "descentkit/oracle.hpp"
#include "descentkit/perm.hpp"
#include "descentkit/rsk.hpp"
#include "descentkit/stats.hpp"
#include "descentkit/tableau.hpp"

namespace descentkit {

inline constexpr int kDefaultCountCap = 9;
inline constexpr int kDefaultEquivalenceCap = 7;
inline constexpr int kDefaultSweepCap = 8;

const char* version();

struct CountPair {
    BigInt direct;
    BigInt formula;
    bool equal() const { return direct == formula; }
};

/// #{p in S_n : asc(p) = is(p) - 1} against sum_lambda f^lambda s_{lambda'}(1^{lambda_1}).
CountPair count_asc_eq_is_minus_1(int n, int cap = kDefaultCountCap);

struct DeficiencyCount {
    CountPair counts;
    /// Per permutation: ls_{{1}} < is + 1 exactly when row 1 of evac(Q) ends in n.
    bool characterizations_agree = true;
    std::optional<Permutation> disagreement;
};

/// #{p in S_n : ls_{{1}}(p) < is(p) + 1} against sum_{lambda |- n-1} f^{lambda+1} f^lambda.
DeficiencyCount count_ls1_deficient(int n, int cap = kDefaultCountCap);

struct EquivalenceClass {
    Permutation representative;  ///< lexicographically smallest member
    int size = 0;
    int recording_tableaux = 0;  ///< distinct Q(p) inside the class
};

struct EquivalenceResult {
    int n = 0;
    int by_profile = 0;
    int by_triangle = 0;
    int by_recording = 0;
    bool partitions_identical = false;
    /// Every recording-tableau class sits inside one profile class.
    bool recording_refines_profile = false;
    std::vector<EquivalenceClass> classes;  ///< profile classes, ordered by representative
};

/// Partitions S_n by full LsProfile and by StatTriangle.
EquivalenceResult equivalence_classes(int n, int cap = kDefaultEquivalenceCap);

/// Lazily computed per-permutation data shared by the sweep checks.
class PermContext {
public:
    explicit PermContext(Permutation p) : p_(std::move(p)) {}

    const Permutation& perm() const noexcept { return p_; }
    const RskPair& rsk_pair();
    const GrowthDiagram& growth();
    const StatTriangle& triangle();
    const LsProfile& profile();

private:
    Permutation p_;
    std::optional<RskPair> rsk_;
    std::optional<GrowthDiagram> growth_;
    std::optional<StatTriangle> triangle_;
    std::optional<LsProfile> profile_;
};

struct CheckOutcome {
    std::uint64_t comparisons = 0;
    std::optional<std::string> failure;
};

/// Names accepted by sweep_verify, in report order.
const std::vector<std::string>& sweep_check_names();

/// Runs one named check on one permutation.
CheckOutcome run_check(const std::string& name, PermContext& ctx);

struct CheckReport {
    std::string check;
    int n_max = 0;
    std::uint64_t population = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t failure_count = 0;
    /// First counterexample, in lexicographic sweep order.
    std::optional<std::string> first_failure;

    bool passed() const noexcept { return failure_count == 0; }
};

struct SweepReport {
    int n_max = 0;
    std::vector<CheckReport> checks;

    bool passed() const noexcept;
};

/// Runs the selected checks over all of S_1, ..., S_{n_max}, sharding each
/// S_n into contiguous lexicographic ranges over `jobs` worker threads.
/// Unknown check names throw std::invalid_argument; "all" selects everything.
SweepReport sweep_verify(int n_max, const std::vector<std::string>& checks, int jobs = 1,
                         int cap = kDefaultSweepCap);

nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const SweepReport& r);
nlohmann::json to_json(const EquivalenceResult& r);

}  // namespace descentkit
