#include "descentkit/census.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "descentkit/error.hpp"
#include "descentkit/growth.hpp"

#ifndef DESCENTKIT_VERSION
#define DESCENTKIT_VERSION "0.0.0"
#endif

namespace descentkit {

const char* version() { return DESCENTKIT_VERSION; }

namespace {

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
    do {
        fn(Permutation(e));
    } while (next_permutation(e));
}

}  // namespace

CountPair count_asc_eq_is_minus_1(int n, int cap) {
    if (n < 1) throw std::invalid_argument("census needs n >= 1");
    check_guard("asc = is - 1 census size", n, cap);
    CountPair out;
    for_each_permutation(n, [&](const Permutation& p) {
        if (asc(p) == lis(p) - 1) ++out.direct;
    });
    for (const Partition& shape : partitions_of(n))
        out.formula += syt_count(shape) * ssyt_count(shape.conjugate(), shape.first_part());
    return out;
}

DeficiencyCount count_ls1_deficient(int n, int cap) {
    if (n < 1) throw std::invalid_argument("census needs n >= 1");
    check_guard("ls_{1} deficiency census size", n, cap);
    DeficiencyCount out;
    const DescentSet first{1};
    for_each_permutation(n, [&](const Permutation& p) {
        const bool deficient = ls_D(p, first) < lis(p) + 1;
        const StandardTableau qe = evacuate(rsk(p).recording);
        const bool ends_in_n = qe.first_row().back() == n;
        if (deficient) ++out.counts.direct;
        if (deficient != ends_in_n && out.characterizations_agree) {
            out.characterizations_agree = false;
            out.disagreement = p;
        }
    });
    for (const Partition& shape : partitions_of(n - 1))
        out.counts.formula += syt_count(shape.widen_first_row()) * syt_count(shape);
    return out;
}

EquivalenceResult equivalence_classes(int n, int cap) {
    if (n < 1) throw std::invalid_argument("census needs n >= 1");
    check_guard("equivalence census size", n, cap);
    EquivalenceResult out;
    out.n = n;

    std::map<std::vector<int>, int> profile_ids;
    std::map<std::vector<int>, int> triangle_ids;
    std::map<std::string, int> recording_ids;
    std::set<std::pair<int, int>> profile_triangle_pairs;
    std::set<std::pair<int, int>> recording_profile_pairs;
    std::vector<std::set<int>> recordings_per_class;

    for_each_permutation(n, [&](const Permutation& p) {
        const LsProfile profile = brute_profile(p);
        std::vector<int> profile_key(profile.values().begin(), profile.values().end());
        const StatTriangle t = stat_triangle(p);
        std::vector<int> triangle_key;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                triangle_key.push_back(t(i, j).is_val);
                triangle_key.push_back(t(i, j).ds_val);
            }
        const std::string q_key = to_string(rsk(p).recording);

        auto [pit, new_profile] = profile_ids.try_emplace(std::move(profile_key), static_cast<int>(profile_ids.size()));
        auto [tit, new_triangle] = triangle_ids.try_emplace(std::move(triangle_key), static_cast<int>(triangle_ids.size()));
        auto [qit, new_q] = recording_ids.try_emplace(q_key, static_cast<int>(recording_ids.size()));
        (void)new_triangle;
        (void)new_q;
        if (new_profile) {
            out.classes.push_back(EquivalenceClass{p, 0, 0});
            recordings_per_class.emplace_back();
        }
        auto& cls = out.classes[static_cast<std::size_t>(pit->second)];
        ++cls.size;
        recordings_per_class[static_cast<std::size_t>(pit->second)].insert(qit->second);
        profile_triangle_pairs.emplace(pit->second, tit->second);
        recording_profile_pairs.emplace(qit->second, pit->second);
    });

    for (std::size_t c = 0; c < out.classes.size(); ++c)
        out.classes[c].recording_tableaux = static_cast<int>(recordings_per_class[c].size());
    out.by_profile = static_cast<int>(profile_ids.size());
    out.by_triangle = static_cast<int>(triangle_ids.size());
    out.by_recording = static_cast<int>(recording_ids.size());
    out.partitions_identical = out.by_profile == out.by_triangle &&
                               static_cast<int>(profile_triangle_pairs.size()) == out.by_profile;
    out.recording_refines_profile = static_cast<int>(recording_profile_pairs.size()) == out.by_recording;
    return out;
}

const RskPair& PermContext::rsk_pair() {
    if (!rsk_) rsk_ = rsk(p_);
    return *rsk_;
}

const GrowthDiagram& PermContext::growth() {
    if (!growth_) growth_ = build_growth(rsk_pair().recording);
    return *growth_;
}

const StatTriangle& PermContext::triangle() {
    if (!triangle_) triangle_ = stat_triangle(growth());
    return *triangle_;
}

const LsProfile& PermContext::profile() {
    if (!profile_) profile_ = brute_profile(p_);
    return *profile_;
}

namespace {

class Failure {
public:
    explicit Failure(CheckOutcome& out) : out_(out) {}

    // Counts one comparison; records the first mismatch.
    template <typename Describe>
    void expect(bool ok, Describe&& describe) {
        ++out_.comparisons;
        if (!ok && !out_.failure) out_.failure = describe();
    }

private:
    CheckOutcome& out_;
};

std::string show(int v) { return std::to_string(v); }

using PermCheck = std::function<void(PermContext&, Failure&)>;

std::vector<int> longest_increasing_from(const Permutation& p) {
    const int n = p.size();
    std::vector<int> from(static_cast<std::size_t>(n) + 2, 0);
    for (int s = n; s >= 1; --s) {
        int best = 1;
        for (int t = s + 1; t <= n; ++t)
            if (p(t) > p(s)) best = std::max(best, 1 + from[static_cast<std::size_t>(t)]);
        from[static_cast<std::size_t>(s)] = best;
    }
    return from;
}

const std::vector<DescentWord>& short_words() {
    static const std::vector<DescentWord> words = [] {
        std::vector<DescentWord> out;
        for (int len = 1; len <= 4; ++len)
            for (int bits = 0; bits < (1 << len); ++bits) {
                std::string w;
                for (int b = 0; b < len; ++b) w.push_back(bits & (1 << b) ? 'D' : 'U');
                out.emplace_back(w);
            }
        return out;
    }();
    return words;
}

const std::vector<std::pair<std::string, PermCheck>>& perm_checks() {
    static const std::vector<std::pair<std::string, PermCheck>> checks = {
        {"evac-involution",
         [](PermContext& c, Failure& f) {
             const auto& r = c.rsk_pair();
             f.expect(evacuate(evacuate(r.recording)) == r.recording, [&] { return "evac(evac(Q)) != Q"; });
             f.expect(evacuate(evacuate(r.insertion)) == r.insertion, [&] { return "evac(evac(P)) != P"; });
         }},
        {"evac-rc",
         [](PermContext& c, Failure& f) {
             const auto& r = c.rsk_pair();
             const RskPair rc = rsk(reverse_complement(c.perm()));
             f.expect(evacuate(r.recording) == rc.recording, [&] { return "evac(Q(p)) != Q(p^rc)"; });
             f.expect(evacuate(r.insertion) == rc.insertion, [&] { return "evac(P(p)) != P(p^rc)"; });
         }},
        {"des-q",
         [](PermContext& c, Failure& f) {
             f.expect(descent_set(c.perm()) == tableau_descents(c.rsk_pair().recording),
                      [&] { return "Des(p) != Des(Q(p))"; });
         }},
        {"rc-descents",
         [](PermContext& c, Failure& f) {
             const Permutation& p = c.perm();
             const int n = p.size();
             const Permutation rc = reverse_complement(p);
             f.expect(reverse_complement(rc) == p, [&] { return "rc(rc(p)) != p"; });
             std::vector<int> reflected;
             const DescentSet original = descent_set(p);
             for (int i : original.positions()) reflected.push_back(n - i);
             f.expect(descent_set(rc) == DescentSet(reflected), [&] { return "Des(rc(p)) != n - Des(p)"; });
         }},
        {"chain-roundtrip",
         [](PermContext& c, Failure& f) {
             const auto& r = c.rsk_pair();
             f.expect(chain_decode(chain_encode(r.recording)) == r.recording, [&] { return "chain round trip of Q"; });
             f.expect(chain_decode(chain_encode(r.insertion)) == r.insertion, [&] { return "chain round trip of P"; });
         }},
        {"prefix-shapes",
         [](PermContext& c, Failure& f) {
             const PartitionChain chain = chain_encode(c.rsk_pair().recording);
             for (int m = 1; m <= c.perm().size(); ++m)
                 f.expect(rsk_shape(c.perm().word().factor(1, m)) == chain[m],
                          [&] { return "prefix shape differs at m = " + show(m); });
         }},
        {"factor-shape",
         [](PermContext& c, Failure& f) {
             const int n = c.perm().size();
             for (int i = 1; i <= n; ++i)
                 for (int j = i; j <= n; ++j)
                     f.expect(factor_shape(c.growth(), i, j) == rsk_shape(c.perm().word().factor(i, j)),
                              [&] { return "factor shape differs at [" + show(i) + "," + show(j) + "]"; });
         }},
        {"local-rule",
         [](PermContext& c, Failure& f) {
             const GrowthDiagram& g = c.growth();
             for (int i = 1; i <= g.n(); ++i)
                 for (int j = i + 1; j <= g.n(); ++j) {
                     auto cands = sandwich_partitions(g.at(i, j - 1), g.at(i - 1, j));
                     const bool member = std::find(cands.begin(), cands.end(), g.at(i, j)) != cands.end();
                     const bool avoids = cands.size() < 2 || g.at(i, j) != g.at(i - 1, j - 1);
                     f.expect(member && avoids, [&] { return "local rule broken at (" + show(i) + "," + show(j) + ")"; });
                 }
         }},
        {"first-row-milestones",
         [](PermContext& c, Failure& f) {
             const Permutation& p = c.perm();
             auto u = first_row_milestones(c.rsk_pair().recording);
             for (std::size_t i = 0; i < u.size(); ++i) {
                 int smallest = 0;
                 for (int m = 1; m <= p.size() && smallest == 0; ++m)
                     if (lis(p.word().factor(1, m)) >= static_cast<int>(i) + 1) smallest = m;
                 f.expect(u[i] == smallest, [&] { return "u_" + show(static_cast<int>(i) + 1) + " != " + show(smallest); });
             }
         }},
        {"evac-first-row",
         [](PermContext& c, Failure& f) {
             const Permutation& p = c.perm();
             const int n = p.size();
             const auto from = longest_increasing_from(p);
             const StandardTableau qe = evacuate(c.rsk_pair().recording);
             auto v = qe.first_row();
             for (std::size_t i = 0; i < v.size(); ++i) {
                 int largest = 0;
                 for (int s = 1; s <= n; ++s)
                     if (from[static_cast<std::size_t>(s)] >= static_cast<int>(i) + 1) largest = s;
                 f.expect(n - v[i] + 1 == largest,
                          [&] { return "rightmost start of length " + show(static_cast<int>(i) + 1) + " is " + show(largest); });
             }
         }},
        {"greene",
         [](PermContext& c, Failure& f) {
             for (int k = 1; k <= 3; ++k)
                 f.expect(greene_sums(c.perm(), k) == c.profile().is_k(k), [&] { return "is_" + show(k) + " mismatch"; });
         }},
        {"stat-triangle",
         [](PermContext& c, Failure& f) {
             const int n = c.perm().size();
             for (int i = 1; i <= n; ++i)
                 for (int j = i; j <= n; ++j) {
                     const Word w = c.perm().word().factor(i, j);
                     f.expect(c.triangle()(i, j) == FactorStats{lis(w), lds(w)},
                              [&] { return "a_{" + show(i) + "," + show(j) + "} mismatch"; });
                 }
         }},
        {"lsD-oracle",
         [](PermContext& c, Failure& f) {
             const int n = c.perm().size();
             for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
                 const DescentSet d = DescentSet::from_mask(mask);
                 const int got = ls_D(c.triangle(), d);
                 const int want = c.profile().at_mask(mask);
                 f.expect(got == want, [&] { return "ls_" + to_string(d) + " = " + show(got) + ", oracle " + show(want); });
             }
         }},
        {"lsd-oracle",
         [](PermContext& c, Failure& f) {
             const int n = c.perm().size();
             const int descents = des(c.perm());
             for (int d = 0; d < n; ++d) {
                 const int got = ls_d(c.triangle(), d, descents);
                 f.expect(got == c.profile().ls_d(d),
                          [&] { return "ls_d(" + show(d) + ") = " + show(got) + ", oracle " + show(c.profile().ls_d(d)); });
             }
         }},
        {"lsd-growth",
         [](PermContext& c, Failure& f) {
             const int n = c.perm().size();
             std::vector<int> by_count(static_cast<std::size_t>(n), 0);
             for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
                 const DescentSet d = DescentSet::from_mask(mask);
                 auto& slot = by_count[static_cast<std::size_t>(d.size())];
                 slot = std::max(slot, ls_D(c.triangle(), d));
             }
             for (int d = 0; d < n; ++d) {
                 const int via_growth = ls_d_via_growth(c.perm(), d);
                 f.expect(via_growth == ls_d(c.perm(), d), [&] { return "ls_d_via_growth(" + show(d) + ") != ls_d"; });
                 f.expect(via_growth == by_count[static_cast<std::size_t>(d)],
                          [&] { return "ls_d(" + show(d) + ") != max over |D| = d of ls_D"; });
             }
         }},
        {"ls1-first-rows",
         [](PermContext& c, Failure& f) {
             if (c.perm().is_identity()) return;
             f.expect(ls1_via_first_rows(c.perm()) == ls_d(c.perm(), 1), [&] { return "first-row ls_1 mismatch"; });
         }},
        {"peel",
         [](PermContext& c, Failure& f) {
             const int n = c.perm().size();
             for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
                 const int want = c.profile().at_mask(mask);
                 if (want == 0) continue;
                 const DescentSet d = DescentSet::from_mask(mask);
                 int got = -1;
                 try {
                     got = ls_D_peel(c.perm(), d);
                 } catch (const PreconditionError&) {
                 }
                 f.expect(got == want, [&] { return "peel " + to_string(d) + " = " + show(got) + ", oracle " + show(want); });
             }
         }},
        {"singleton",
         [](PermContext& c, Failure& f) {
             const Permutation& p = c.perm();
             const int n = p.size();
             for (int i = 1; i < n; ++i) {
                 const int want = c.profile()[DescentSet{i}];
                 f.expect(ls_singleton_via_good_pairs(p, i) == want, [&] { return "good pairs at i = " + show(i); });
                 if (want != 0)
                     f.expect(ls_singleton_formula(p, i) == want, [&] { return "singleton formula at i = " + show(i); });
                 if (!p.is_identity()) {
                     const auto th = ls_singleton_threshold(p, i);
                     f.expect(th.exists == (want != 0) && (!th.exists || want >= th.lower_bound),
                              [&] { return "singleton threshold at i = " + show(i); });
                 }
             }
         }},
        {"existence",
         [](PermContext& c, Failure& f) {
             const int n = c.perm().size();
             for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
                 const DescentSet d = DescentSet::from_mask(mask);
                 f.expect(ls_D_existence(c.perm(), d) == (c.profile().at_mask(mask) != 0),
                          [&] { return "existence of " + to_string(d); });
             }
         }},
        {"lenw",
         [](PermContext& c, Failure& f) {
             for (const DescentWord& w : short_words()) {
                 const int got = len_w(c.triangle(), w);
                 const int want = brute_len_w(c.perm(), w);
                 f.expect(got == want, [&] { return "len_" + w.str() + " = " + show(got) + ", oracle " + show(want); });
             }
         }},
        {"alternating",
         [](PermContext& c, Failure& f) {
             f.expect(alternating_length(c.triangle()) == brute_alternating_length(c.perm()),
                      [&] { return "alternating length mismatch"; });
         }},
        {"reconstruct",
         [](PermContext& c, Failure& f) {
             f.expect(reconstruct_triangle_from_profile(c.perm(), c.profile()) == c.triangle(),
                      [&] { return "triangle reconstruction from ls_D values"; });
         }},
        {"bounds",
         [](PermContext& c, Failure& f) {
             const Permutation& p = c.perm();
             const int n = p.size();
             const int descents = des(p);
             const int is = lis(p);
             const int ascents = asc(p);
             const LsProfile& prof = c.profile();
             for (int d = 0; d < n; ++d) {
                 const int v = prof.ls_d(d);
                 if (d > descents) {
                     f.expect(v == 0, [&] { return "ls_" + show(d) + " nonzero past des"; });
                     continue;
                 }
                 f.expect(v >= d + 1, [&] { return "ls_" + show(d) + " < d + 1"; });
                 f.expect(is + d <= v, [&] { return "ls_" + show(d) + " < is + d"; });
                 f.expect(v <= std::min(greene_sums(p, d + 1), ascents + d + 1),
                          [&] { return "ls_" + show(d) + " above min(is_{d+1}, asc + d + 1)"; });
                 if (d >= 1) f.expect(prof.ls_d(d - 1) < v, [&] { return "ls_d not strictly increasing at d = " + show(d); });
             }
         }},
        {"characterization",
         [](PermContext& c, Failure& f) {
             const Permutation& p = c.perm();
             const int descents = des(p);
             const int is = lis(p);
             const int ascents = asc(p);
             for (int d = 1; d <= descents; ++d) {
                 const int v = c.profile().ls_d(d);
                 f.expect((v == is + d) == (ascents == is - 1), [&] { return "iff fails at d = " + show(d); });
                 if (ascents == is) f.expect(v == is + d + 1, [&] { return "asc = is but ls_d != is + d + 1 at d = " + show(d); });
             }
         }},
    };
    return checks;
}

using SizeCheck = std::function<void(int n, Failure&)>;

const std::vector<std::pair<std::string, SizeCheck>>& size_checks() {
    static const std::vector<std::pair<std::string, SizeCheck>> checks = {
        {"rsk-injective",
         [](int n, Failure& f) {
             std::set<std::string> pairs;
             for_each_permutation(n, [&](const Permutation& p) {
                 const RskPair r = rsk(p);
                 const bool fresh = pairs.insert(to_string(r.insertion) + "|" + to_string(r.recording)).second;
                 f.expect(fresh, [&] { return "RSK pair repeated at " + to_string(p); });
             });
         }},
        {"q-dependence",
         [](int n, Failure& f) {
             std::map<std::string, std::pair<Permutation, std::vector<int>>> seen;
             for_each_permutation(n, [&](const Permutation& p) {
                 const LsProfile prof = brute_profile(p);
                 std::vector<int> values(prof.values().begin(), prof.values().end());
                 auto [it, fresh] = seen.try_emplace(to_string(rsk(p).recording), p, values);
                 if (!fresh)
                     f.expect(it->second.second == values, [&] {
                         return "profiles differ for " + to_string(it->second.first) + " and " + to_string(p);
                     });
             });
         }},
    };
    return checks;
}

struct PerCheckTally {
    std::uint64_t comparisons = 0;
    std::uint64_t failures = 0;
    std::optional<std::string> first;
};

}  // namespace

const std::vector<std::string>& sweep_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : perm_checks()) out.push_back(name);
        for (const auto& [name, fn] : size_checks()) out.push_back(name);
        return out;
    }();
    return names;
}

CheckOutcome run_check(const std::string& name, PermContext& ctx) {
    for (const auto& [check_name, fn] : perm_checks()) {
        if (check_name != name) continue;
        CheckOutcome out;
        Failure f(out);
        fn(ctx, f);
        return out;
    }
    throw std::invalid_argument("unknown per-permutation check '" + name + "'");
}

bool SweepReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed(); });
}

SweepReport sweep_verify(int n_max, const std::vector<std::string>& requested, int jobs, int cap) {
    check_guard("sweep size", n_max, cap);
    if (n_max < 1) throw std::invalid_argument("sweep needs n_max >= 1");
    jobs = std::max(1, jobs);

    std::vector<std::string> selected;
    for (const auto& name : requested) {
        if (name == "all") {
            selected = sweep_check_names();
            break;
        }
        const auto& all = sweep_check_names();
        if (std::find(all.begin(), all.end(), name) == all.end())
            throw std::invalid_argument("unknown check '" + name + "'");
        if (std::find(selected.begin(), selected.end(), name) == selected.end()) selected.push_back(name);
    }

    std::vector<const PermCheck*> per_perm;
    std::vector<std::size_t> per_perm_slot;
    std::vector<const SizeCheck*> per_size;
    std::vector<std::size_t> per_size_slot;
    for (std::size_t s = 0; s < selected.size(); ++s) {
        for (const auto& [name, fn] : perm_checks())
            if (name == selected[s]) {
                per_perm.push_back(&fn);
                per_perm_slot.push_back(s);
            }
        for (const auto& [name, fn] : size_checks())
            if (name == selected[s]) {
                per_size.push_back(&fn);
                per_size_slot.push_back(s);
            }
    }

    std::vector<PerCheckTally> totals(selected.size());
    std::uint64_t population = 0;

    auto record = [](PerCheckTally& tally, const CheckOutcome& out, const std::string& where) {
        tally.comparisons += out.comparisons;
        if (out.failure) {
            ++tally.failures;
            if (!tally.first) tally.first = where + ": " + *out.failure;
        }
    };

    for (int n = 1; n <= n_max; ++n) {
        const std::uint64_t total = factorial(n);
        population += total;
        const auto shards = static_cast<std::uint64_t>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total));
        std::vector<std::vector<PerCheckTally>> shard_tallies(shards, std::vector<PerCheckTally>(selected.size()));
        std::vector<std::exception_ptr> errors(shards);

        auto work = [&](std::uint64_t shard) {
            try {
                const std::uint64_t lo = total * shard / shards;
                const std::uint64_t hi = total * (shard + 1) / shards;
                const Permutation start = unrank_permutation(n, lo);
                std::vector<int> e(start.entries().begin(), start.entries().end());
                for (std::uint64_t rank = lo; rank < hi; ++rank) {
                    PermContext ctx{Permutation(e)};
                    for (std::size_t c = 0; c < per_perm.size(); ++c) {
                        CheckOutcome out;
                        Failure f(out);
                        try {
                            (*per_perm[c])(ctx, f);
                        } catch (const std::exception& ex) {
                            // A throwing route counts as a mismatch, not a crash.
                            f.expect(false, [&] { return std::string("threw: ") + ex.what(); });
                        }
                        record(shard_tallies[shard][per_perm_slot[c]], out, to_string(ctx.perm()));
                    }
                    next_permutation(e);
                }
            } catch (...) {
                errors[shard] = std::current_exception();
            }
        };

        if (shards == 1) {
            work(0);
        } else {
            std::vector<std::thread> workers;
            for (std::uint64_t s = 0; s < shards; ++s) workers.emplace_back(work, s);
            for (auto& w : workers) w.join();
        }
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);

        // Shards merge in lexicographic order, so the first failure is deterministic.
        for (const auto& shard : shard_tallies)
            for (std::size_t c = 0; c < selected.size(); ++c) {
                totals[c].comparisons += shard[c].comparisons;
                totals[c].failures += shard[c].failures;
                if (!totals[c].first && shard[c].first) totals[c].first = shard[c].first;
            }

        for (std::size_t c = 0; c < per_size.size(); ++c) {
            CheckOutcome out;
            Failure f(out);
            (*per_size[c])(n, f);
            record(totals[per_size_slot[c]], out, "n=" + std::to_string(n));
        }
    }

    SweepReport report;
    report.n_max = n_max;
    for (std::size_t c = 0; c < selected.size(); ++c) {
        CheckReport r;
        r.check = selected[c];
        r.n_max = n_max;
        r.population = population;
        r.comparisons = totals[c].comparisons;
        r.failure_count = totals[c].failures;
        r.first_failure = totals[c].first;
        report.checks.push_back(std::move(r));
    }
    return report;
}

nlohmann::json to_json(const CheckReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    if (r.first_failure) failures.push_back(*r.first_failure);
    return {{"n", r.n_max},
            {"check", r.check},
            {"population", r.population},
            {"comparisons", r.comparisons},
            {"failure_count", r.failure_count},
            {"failures", std::move(failures)}};
}

nlohmann::json to_json(const SweepReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"n_max", r.n_max}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

nlohmann::json to_json(const EquivalenceResult& r) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : r.classes)
        classes.push_back({{"representative", to_string(c.representative.word())},
                           {"size", c.size},
                           {"recording_tableaux", c.recording_tableaux}});
    return {{"n", r.n},
            {"by_profile", r.by_profile},
            {"by_triangle", r.by_triangle},
            {"by_recording", r.by_recording},
            {"partitions_identical", r.partitions_identical},
            {"recording_refines_profile", r.recording_refines_profile},
            {"classes", std::move(classes)}};
}

}  // namespace descentkit
