#include "snclab/search.hpp"
#include "snclab/hashing.hpp"
#include "snclab/prng.hpp"
#include "snclab/simplex.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace snclab {

std::string hypothesis_name(HypothesisMode mode)
{
    switch (mode) {
    case HypothesisMode::Identity: return "identity";
    case HypothesisMode::IdentitySubset: return "identity+subset";
    case HypothesisMode::TournamentPair: return "tournament";
    }
    return "?";
}

const std::vector<int> & valid_patterns(HypothesisMode mode)
{
    static const auto build = [](HypothesisMode m) {
        std::vector<int> out;
        for (int code = 0; code < 16; ++code) {
            const bool a_uv = code & 1, a_vu = code & 2, b_uv = code & 4, b_vu = code & 8;
            if ((a_uv && b_vu) || (a_vu && b_uv))
                continue; // would put a non-loop edge into A & B^T
            if (m == HypothesisMode::IdentitySubset && ((a_uv && ! b_uv) || (a_vu && ! b_vu)))
                continue;
            if (m == HypothesisMode::TournamentPair && (! (a_uv || b_vu) || ! (a_vu || b_uv)))
                continue; // A | B^T must cover both ordered pairs
            out.push_back(code);
        }
        return out;
    };
    static const std::vector<int> identity_pats = build(HypothesisMode::Identity);
    static const std::vector<int> subset_pats = build(HypothesisMode::IdentitySubset);
    static const std::vector<int> tournament_pats = build(HypothesisMode::TournamentPair);
    switch (mode) {
    case HypothesisMode::IdentitySubset: return subset_pats;
    case HypothesisMode::TournamentPair: return tournament_pats;
    default: return identity_pats;
    }
}

namespace {
    struct Slot {
        Vertex u, v;
    };

    std::vector<Slot> pair_slots(Eigen::Index n)
    {
        std::vector<Slot> slots;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                slots.push_back(Slot{u, v});
        return slots;
    }

    void apply_pattern(DigraphPair & p, const Slot & s, int code)
    {
        p.a.set(s.u, s.v, code & 1);
        p.a.set(s.v, s.u, code & 2);
        p.b.set(s.u, s.v, code & 4);
        p.b.set(s.v, s.u, code & 8);
    }

    // digit s counts with weight k^(t-1-s): slot 0 is the slowest digit.
    std::vector<std::size_t> decode_digits(std::uint64_t index, std::size_t t, std::uint64_t k)
    {
        std::vector<std::size_t> digits(t, 0);
        for (std::size_t s = t; s-- > 0;) {
            digits[s] = static_cast<std::size_t>(index % k);
            index /= k;
        }
        return digits;
    }

    bool unweighted_holds_somewhere(const DigraphPair & p, Variant variant)
    {
        Relation c = compose(p.a, p.b);
        if (variant == Variant::Union)
            c = union_of(c, compose(p.b, p.a));
        for (Vertex v = 0; v < p.size(); ++v) {
            const Eigen::Index lhs = c.grid().row(v).count();
            const Eigen::Index rhs =
                p.a.grid().row(v).count() + p.b.grid().row(v).count() - 1;
            if (lhs >= rhs)
                return true;
        }
        return false;
    }

    void check_bounds(Eigen::Index n, bool allow_large)
    {
        if (n < 1)
            throw PreconditionError("search: need n >= 1");
        const Eigen::Index bound = allow_large ? 5 : 4;
        if (n > bound)
            throw PreconditionError("exhaustive bound exceeded: n = " + std::to_string(n) +
                (allow_large ? " > 5" : " > 4 (pass allow_large for n = 5)"));
    }

    // One worker's share of either campaign, merged by ascending index later.
    struct WorkerResult {
        std::uint64_t fingerprint = 0;
        std::vector<CounterexampleRecord> findings;
    };

    void verify_and_record(WorkerResult & result, std::uint64_t index, const DigraphPair & p,
        WeightVector weights, Variant variant)
    {
        // Nothing enters a report without an independent rational re-check.
        InequalityReport report = product_inequality_report(p, weights, variant);
        if (! report.satisfying.empty())
            throw Error("search: candidate counterexample failed re-verification");
        result.findings.push_back(CounterexampleRecord{index, p, std::move(weights), variant});
    }

    void examine(WorkerResult & result, std::uint64_t index, const DigraphPair & p,
        const SearchConfig & config)
    {
        result.fingerprint += pair_fingerprint(p);
        if (! unweighted_holds_somewhere(p, config.variant)) {
            verify_and_record(result, index, p, uniform_weights(p.size()), config.variant);
            return;
        }
        if (config.weight_oracle) {
            if (auto weights = find_violating_weights(p, config.variant))
                verify_and_record(result, index, p, std::move(*weights), config.variant);
        }
    }

    SearchReport merge_results(std::vector<WorkerResult> results, std::uint64_t examined,
        std::chrono::steady_clock::time_point started)
    {
        SearchReport report;
        report.examined = examined;
        for (WorkerResult & r : results) {
            report.fingerprint += r.fingerprint;
            std::move(r.findings.begin(), r.findings.end(), std::back_inserter(report.findings));
        }
        std::sort(report.findings.begin(), report.findings.end(),
            [](const CounterexampleRecord & a, const CounterexampleRecord & b) {
                return a.index < b.index;
            });
        report.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        return report;
    }

    // Splits [0, total) into contiguous chunks and runs body(worker, from, to)
    // on each; results keep worker order, so campaigns are width-independent.
    std::vector<WorkerResult> run_partitioned(std::uint64_t total, unsigned width,
        const std::function<void(WorkerResult &, std::uint64_t, std::uint64_t)> & body)
    {
        width = std::max(1u, width);
        const auto chunks = static_cast<std::uint64_t>(width);
        std::vector<WorkerResult> results(width);
        std::vector<std::thread> threads;
        for (std::uint64_t w = 0; w < chunks; ++w) {
            const std::uint64_t from = total / chunks * w + std::min(w, total % chunks);
            const std::uint64_t to = total / chunks * (w + 1) + std::min(w + 1, total % chunks);
            threads.emplace_back(
                [&body, &results, w, from, to] { body(results[w], from, to); });
        }
        for (std::thread & t : threads)
            t.join();
        return results;
    }
}

std::uint64_t pair_enumeration_total(Eigen::Index n, HypothesisMode mode)
{
    if (n < 1 || n > 5)
        throw PreconditionError("enumeration total only defined for 1 <= n <= 5");
    const std::uint64_t k = valid_patterns(mode).size();
    std::uint64_t total = 1;
    for (Eigen::Index i = 0; i < n * (n - 1) / 2; ++i)
        total *= k;
    return total;
}

std::uint64_t enumerate_pairs(Eigen::Index n, HypothesisMode mode,
    const std::function<void(const DigraphPair &)> & visit, bool allow_large)
{
    check_bounds(n, allow_large);
    const std::vector<int> & patterns = valid_patterns(mode);
    const std::vector<Slot> slots = pair_slots(n);
    const std::uint64_t k = patterns.size();
    const std::uint64_t total = pair_enumeration_total(n, mode);

    DigraphPair scratch(identity(n), identity(n));
    std::vector<std::size_t> digits(slots.size(), 0);
    for (const Slot & s : slots)
        apply_pattern(scratch, s, patterns[0]);

    for (std::uint64_t index = 0;; ++index) {
        visit(scratch);
        if (index + 1 == total)
            break;
        // odometer step, least significant digit last
        for (std::size_t s = slots.size(); s-- > 0;) {
            if (++digits[s] < k) {
                apply_pattern(scratch, slots[s], patterns[digits[s]]);
                break;
            }
            digits[s] = 0;
            apply_pattern(scratch, slots[s], patterns[0]);
        }
    }
    return total;
}

DigraphPair sample_pair(Eigen::Index n, HypothesisMode mode, std::uint64_t seed,
    std::uint64_t index)
{
    if (n < 1)
        throw PreconditionError("sample_pair: need n >= 1");
    const std::vector<int> & patterns = valid_patterns(mode);
    SplitMix64 rng(mix_seed(seed, index));
    DigraphPair p(identity(n), identity(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            apply_pattern(p, Slot{u, v}, patterns[rng.below(patterns.size())]);
    return p;
}

std::uint64_t pair_fingerprint(const DigraphPair & p)
{
    Fnv1a h;
    h.update_u64(static_cast<std::uint64_t>(p.size()));
    for (const Relation * r : {&p.a, &p.b})
        for (Eigen::Index u = 0; u < p.size(); ++u)
            for (Eigen::Index v = 0; v < p.size(); ++v)
                h.update(r->grid()(u, v) ? 1 : 0);
    return h.digest();
}

std::optional<WeightVector> find_violating_weights(const DigraphPair & p, Variant variant)
{
    if (variant == Variant::Wsnp)
        throw PreconditionError("find_violating_weights: ab or union only");
    if (! check_identity_hypothesis(p))
        throw PreconditionError("find_violating_weights: identity hypothesis fails");
    const Eigen::Index n = p.size();

    Relation c = compose(p.a, p.b);
    if (variant == Variant::Union)
        c = union_of(c, compose(p.b, p.a));

    // max t  s.t.  w(A(v)) + w(B(v)) - w(v) - w(C(v)) >= t  for every v,
    // sum w = 1, w >= 0.  t is free, split into t+ - t-.
    const Eigen::Index tp = n, tm = n + 1;
    RationalMatrix a = RationalMatrix::Zero(n + 1, n + 2);
    RationalVector b = RationalVector::Zero(n + 1);
    std::vector<Sense> senses(n + 1, Sense::GreaterEq);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u = 0; u < n; ++u) {
            int coeff = 0;
            coeff += p.a.grid()(v, u) ? 1 : 0;
            coeff += p.b.grid()(v, u) ? 1 : 0;
            coeff -= u == v ? 1 : 0;
            coeff -= c.grid()(v, u) ? 1 : 0;
            a(v, u) = coeff;
        }
        a(v, tp) = -1;
        a(v, tm) = 1;
    }
    a.row(n).head(n).setConstant(Rational(1));
    b(n) = 1;
    senses[n] = Sense::Equal;

    RationalVector objective = RationalVector::Zero(n + 2);
    objective(tp) = 1;
    objective(tm) = -1;

    auto solution = lp_maximize<Rational>(a, senses, b, objective);
    if (solution.status != LpStatus::Optimal)
        throw Error("weight oracle: LP should always be feasible and bounded");
    if (solution.objective <= 0)
        return std::nullopt;

    WeightVector weights = solution.x.head(n);
    InequalityReport check = product_inequality_report(p, weights, variant);
    if (! check.satisfying.empty())
        throw Error("weight oracle: returned weights fail re-verification");
    return weights;
}

SearchReport exhaustive_search(const SearchConfig & config)
{
    check_bounds(config.n, config.allow_large_exhaustive);
    const auto started = std::chrono::steady_clock::now();
    const std::vector<int> & patterns = valid_patterns(config.hypothesis);
    const std::vector<Slot> slots = pair_slots(config.n);
    const std::uint64_t k = patterns.size();
    const std::uint64_t total = pair_enumeration_total(config.n, config.hypothesis);

    auto body = [&](WorkerResult & result, std::uint64_t from, std::uint64_t to) {
        if (from >= to)
            return;
        DigraphPair scratch(identity(config.n), identity(config.n));
        std::vector<std::size_t> digits = decode_digits(from, slots.size(), k);
        for (std::size_t s = 0; s < slots.size(); ++s)
            apply_pattern(scratch, slots[s], patterns[digits[s]]);
        for (std::uint64_t index = from;; ++index) {
            examine(result, index, scratch, config);
            if (index + 1 == to)
                break;
            for (std::size_t s = slots.size(); s-- > 0;) {
                if (++digits[s] < k) {
                    apply_pattern(scratch, slots[s], patterns[digits[s]]);
                    break;
                }
                digits[s] = 0;
                apply_pattern(scratch, slots[s], patterns[0]);
            }
        }
    };

    return merge_results(run_partitioned(total, config.width, body), total, started);
}

SearchReport random_search(const SearchConfig & config)
{
    if (config.n < 1)
        throw PreconditionError("random_search: need n >= 1");
    const auto started = std::chrono::steady_clock::now();

    auto body = [&](WorkerResult & result, std::uint64_t from, std::uint64_t to) {
        for (std::uint64_t index = from; index < to; ++index) {
            DigraphPair p = sample_pair(config.n, config.hypothesis, config.seed, index);
            examine(result, index, p, config);
        }
    };

    return merge_results(
        run_partitioned(config.iterations, config.width, body), config.iterations, started);
}

} // namespace snclab
