#include "sumlab/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <random>
#include <thread>

namespace sumlab {

std::string to_string(ConstraintFamily family) {
    switch (family) {
        case ConstraintFamily::none: return "none";
        case ConstraintFamily::distinct: return "distinct";
        case ConstraintFamily::difference: return "difference";
        case ConstraintFamily::poly_difference: return "poly_difference";
        case ConstraintFamily::linear: return "linear";
        case ConstraintFamily::poly_random: return "poly_random";
    }
    return "none";
}

ConstraintFamily family_from_string(const std::string& name) {
    for (auto f : {ConstraintFamily::none, ConstraintFamily::distinct,
                   ConstraintFamily::difference, ConstraintFamily::poly_difference,
                   ConstraintFamily::linear, ConstraintFamily::poly_random}) {
        if (to_string(f) == name) return f;
    }
    throw InvalidInput("unknown constraint family: " + name);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::mt19937_64 rng_for_sample(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(index + 1)));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    // unbiased bounded draw; engine output is standard-specified, so this is
    // reproducible across platforms
    std::uint64_t limit = ~0ull - ~0ull % n;
    std::uint64_t v = rng();
    while (v >= limit) v = rng();
    return v % n;
}

std::vector<int> sample_index_subset(std::mt19937_64& rng, int n, int k) {
    // Floyd's algorithm
    std::vector<int> out;
    out.reserve(k);
    for (int j = n - k; j < n; ++j) {
        int t = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(j) + 1));
        if (std::find(out.begin(), out.end(), t) != out.end()) {
            out.push_back(j);
        } else {
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

constexpr std::uint64_t kCountCap = kDefaultInstanceCap;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kCountCap / b) return kCountCap;
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > kCountCap - std::min(b, kCountCap) ? kCountCap : a + b;
}

/// Binomial coefficient, saturating at kCountCap.
std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) / i is exact at every step
        unsigned __int128 t = static_cast<unsigned __int128>(r) * (n - k + i);
        t /= i;
        if (t > kCountCap) return kCountCap;
        r = static_cast<std::uint64_t>(t);
    }
    return r;
}

/// k-combinations of {0..n-1} for k in [kmin, kmax], colex order within each
/// size, sizes ascending. With `anchored`, every subset must contain 0 (the
/// remaining k-1 indices range over {1..n-1}).
class SubsetStream {
public:
    SubsetStream(int n, int kmin, int kmax, bool anchored)
        : n_(n), kmin_(kmin), kmax_(std::min(kmax, n)), anchored_(anchored) {
        if (anchored_) kmin_ = std::max(kmin_, 1);
        total_ = 0;
        for (int k = kmin_; k <= kmax_; ++k) total_ = sat_add(total_, block_size(k));
        seek(0);
    }

    std::uint64_t total() const { return total_; }

    void seek(std::uint64_t rank) {
        if (rank >= total_) {
            done_ = true;
            return;
        }
        done_ = false;
        k_ = kmin_;
        while (rank >= block_size(k_)) {
            rank -= block_size(k_);
            ++k_;
        }
        unrank_in_block(rank);
    }

    bool at_end() const { return done_; }
    const std::vector<int>& current() const { return current_; }

    void advance() {
        if (done_) return;
        int free_n = anchored_ ? n_ - 1 : n_;
        int free_k = anchored_ ? k_ - 1 : k_;
        // colex successor on inner_
        int i = 0;
        bool moved = false;
        for (; i < free_k; ++i) {
            int limit = (i + 1 < free_k) ? inner_[i + 1] : free_n;
            if (inner_[i] + 1 < limit) {
                ++inner_[i];
                for (int j = 0; j < i; ++j) inner_[j] = j;
                moved = true;
                break;
            }
        }
        if (!moved) {
            ++k_;
            if (k_ > kmax_ || block_size(k_) == 0) {
                // skip empty blocks (k too large for n)
                while (k_ <= kmax_ && block_size(k_) == 0) ++k_;
                if (k_ > kmax_) {
                    done_ = true;
                    return;
                }
            }
            unrank_in_block(0);
            return;
        }
        rebuild_current();
    }

private:
    std::uint64_t block_size(int k) const {
        if (k < 0) return 0;
        if (anchored_) return k >= 1 ? binom(n_ - 1, k - 1) : 0;
        return binom(n_, k);
    }

    void unrank_in_block(std::uint64_t rank) {
        int free_n = anchored_ ? n_ - 1 : n_;
        int free_k = anchored_ ? k_ - 1 : k_;
        inner_.assign(free_k, 0);
        // colex unranking: highest position first
        for (int i = free_k; i >= 1; --i) {
            int c = i - 1;
            for (int cand = free_n - 1; cand >= i - 1; --cand) {
                if (binom(cand, i) <= rank) {
                    c = cand;
                    break;
                }
            }
            inner_[i - 1] = c;
            rank -= binom(c, i);
        }
        rebuild_current();
    }

    void rebuild_current() {
        current_.clear();
        if (anchored_) {
            current_.push_back(0);
            for (int v : inner_) current_.push_back(v + 1);
        } else {
            current_ = inner_;
        }
    }

    int n_;
    int kmin_;
    int kmax_;
    bool anchored_;
    std::uint64_t total_ = 0;
    bool done_ = false;
    int k_ = 0;
    std::vector<int> inner_;   // combo over the free index range
    std::vector<int> current_; // universe indices, ascending
};

// -- constraint streams ---------------------------------------------------------

/// Descriptor of one constraint in an exhaustive stream.
struct ConstraintDraw {
    Constraint::Kind kind = Constraint::Kind::none;
    std::vector<int> subset;                            // difference / poly_difference
    std::vector<std::array<std::int64_t, 3>> triples;   // linear: (m, n, universe index)
};

class ConstraintStream {
public:
    ConstraintStream(const SweepPlan& plan, int universe_size)
        : family_(plan.family), universe_size_(universe_size) {
        switch (family_) {
            case ConstraintFamily::none:
            case ConstraintFamily::distinct:
                total_ = 1;
                break;
            case ConstraintFamily::difference:
                stream_.emplace(universe_size, 1, plan.max_s, false);
                total_ = stream_->total();
                break;
            case ConstraintFamily::poly_difference:
                stream_.emplace(universe_size, 0, plan.max_s, false);
                total_ = stream_->total();
                break;
            case ConstraintFamily::linear: {
                max_n_ = plan.max_n;
                triple_count_ = static_cast<std::uint64_t>(plan.max_m + 1) *
                                (plan.max_n + 1) * universe_size;
                if (triple_count_ > 2000000) {
                    throw ResourceLimit("sweep: linear constraint space exceeds 2*10^6 triples");
                }
                stream_.emplace(static_cast<int>(triple_count_), 0, plan.max_l, false);
                total_ = stream_->total();
                break;
            }
            case ConstraintFamily::poly_random:
                throw InvalidInput("poly_random requires a sampled sweep (set samples)");
        }
    }

    std::uint64_t total() const { return total_; }

    void seek_first() {
        index_ = 0;
        if (stream_) stream_->seek(0);
    }

    bool at_end() const { return index_ >= total_; }

    ConstraintDraw current() const {
        ConstraintDraw d;
        switch (family_) {
            case ConstraintFamily::none:
                d.kind = Constraint::Kind::none;
                break;
            case ConstraintFamily::distinct:
                d.kind = Constraint::Kind::distinct;
                break;
            case ConstraintFamily::difference:
                d.kind = Constraint::Kind::difference;
                d.subset = stream_->current();
                break;
            case ConstraintFamily::poly_difference:
                d.kind = Constraint::Kind::poly;
                d.subset = stream_->current();
                break;
            case ConstraintFamily::linear: {
                d.kind = Constraint::Kind::linear;
                for (int t : stream_->current()) {
                    std::int64_t m = t / ((max_n_ + 1) * universe_size_);
                    std::int64_t rest = t % ((max_n_ + 1) * universe_size_);
                    d.triples.push_back({m, rest / universe_size_, rest % universe_size_});
                }
                break;
            }
            case ConstraintFamily::poly_random:
                break;
        }
        return d;
    }

    void advance() {
        ++index_;
        if (stream_) stream_->advance();
    }

private:
    ConstraintFamily family_;
    int universe_size_;
    int max_n_ = 0;
    std::uint64_t triple_count_ = 0;
    std::uint64_t total_ = 0;
    std::uint64_t index_ = 0;
    std::optional<SubsetStream> stream_;
};

// -- plan context ------------------------------------------------------------------

struct PlanContext {
    SweepPlan plan;
    std::vector<Element> universe;
    AmbientTraits traits;
    bool anchored = false;
    bool use_fast = false;
    std::uint64_t outer_total = 0;
    std::uint64_t b_total = 0;
    std::uint64_t c_total = 0;
    std::uint64_t inner_total = 0;
    std::uint64_t combo_total = 0;
    std::uint64_t combo_limit = 0; // min(combo_total, instance_cap)
};

constexpr int kFastPathMaxUniverse = 512;

Constraint materialize_constraint(const PlanContext& ctx, const ConstraintDraw& d) {
    switch (d.kind) {
        case Constraint::Kind::none:
            return Constraint::make_none();
        case Constraint::Kind::distinct:
            return Constraint::make_distinct();
        case Constraint::Kind::difference: {
            std::vector<Element> s;
            for (int i : d.subset) s.push_back(ctx.universe[i]);
            return Constraint::make_difference(std::move(s), ctx.plan.ambient);
        }
        case Constraint::Kind::poly: {
            const FieldSpec& f = field_of(ctx.plan.ambient);
            std::vector<FieldElement> s;
            for (int i : d.subset) s.push_back(std::get<FieldElement>(ctx.universe[i]));
            return Constraint::make_poly(build_difference_poly(s, f));
        }
        case Constraint::Kind::linear: {
            std::vector<LinearTerm> terms;
            for (const auto& t : d.triples) {
                terms.push_back(LinearTerm{t[0], t[1],
                                           std::get<GroupElement>(ctx.universe[t[2]])});
            }
            return Constraint::make_linear(std::move(terms));
        }
    }
    return Constraint::make_none();
}

Instance materialize_instance(const PlanContext& ctx, const std::vector<int>& a_idx,
                              const std::vector<int>& b_idx, const ConstraintDraw& d) {
    std::vector<Element> a, b;
    a.reserve(a_idx.size());
    b.reserve(b_idx.size());
    for (int i : a_idx) a.push_back(ctx.universe[i]);
    for (int i : b_idx) b.push_back(ctx.universe[i]);
    return make_instance(ctx.plan.ambient, std::move(a), std::move(b),
                         materialize_constraint(ctx, d));
}

struct LocalAcc {
    std::uint64_t checked = 0;
    std::uint64_t satisfied = 0;
    std::uint64_t tight = 0;
    std::uint64_t violated = 0;
    std::uint64_t not_applicable = 0;
    std::vector<SweepHit> violations;
    std::vector<SweepHit> tights;
};

void tally(LocalAcc& acc, Verdict v) {
    ++acc.checked;
    switch (v) {
        case Verdict::satisfied: ++acc.satisfied; break;
        case Verdict::tight: ++acc.tight; break;
        case Verdict::violated: ++acc.violated; break;
        case Verdict::not_applicable: ++acc.not_applicable; break;
    }
}

void record_hits(const PlanContext& ctx, LocalAcc& acc, std::uint64_t combo_index,
                 TheoremId id, const BoundReport& rep, const Instance& inst,
                 const SweepStreamFn& stream) {
    if (stream) stream(SweepHit{combo_index, id, inst, rep});
    if (rep.verdict == Verdict::violated && acc.violations.size() < ctx.plan.violation_cap) {
        acc.violations.push_back(SweepHit{combo_index, id, inst, rep});
    } else if (rep.verdict == Verdict::tight && acc.tights.size() < ctx.plan.tight_cap) {
        acc.tights.push_back(SweepHit{combo_index, id, inst, rep});
    }
}

// -- generic (element-level) exhaustive route ---------------------------------------

void run_generic_combo(const PlanContext& ctx, LocalAcc& acc, std::uint64_t combo_index,
                       const std::vector<int>& a_idx, const std::vector<int>& b_idx,
                       const ConstraintDraw& draw, const Constraint& constraint,
                       const SweepStreamFn& stream) {
    (void)draw;
    std::vector<Element> a, b;
    a.reserve(a_idx.size());
    b.reserve(b_idx.size());
    for (int i : a_idx) a.push_back(ctx.universe[i]);
    for (int i : b_idx) b.push_back(ctx.universe[i]);
    Instance inst;
    inst.ambient = ctx.plan.ambient;
    inst.set_a = std::move(a);
    inst.set_b = std::move(b);
    inst.constraint = constraint;
    SumsetAnalysis analysis = analyze_instance(inst);
    InstanceStats stats = instance_stats(inst, analysis);
    for (TheoremId id : ctx.plan.theorems) {
        BoundReport rep = evaluate_bound(id, ctx.traits, stats);
        tally(acc, rep.verdict);
        if (stream || rep.verdict == Verdict::violated || rep.verdict == Verdict::tight) {
            record_hits(ctx, acc, combo_index, id, rep, inst, stream);
        }
    }
}

// -- fast (index-table) exhaustive route --------------------------------------------

struct FastTables {
    int n = 0;
    std::vector<std::int16_t> add;                    // n * n
    std::vector<std::int16_t> sub;                    // n * n
    std::vector<std::vector<std::int16_t>> scalar;    // scalar[m][i] = index of m*e_i
    int identity = 0;

    int add_idx(int i, int j) const { return add[static_cast<std::size_t>(i) * n + j]; }
    int sub_idx(int i, int j) const { return sub[static_cast<std::size_t>(i) * n + j]; }
};

FastTables build_tables(const PlanContext& ctx) {
    FastTables t;
    const auto& u = ctx.universe;
    t.n = static_cast<int>(u.size());
    auto index_of = [&](const Element& e) {
        auto it = std::lower_bound(u.begin(), u.end(), e,
                                   [](const Element& x, const Element& y) {
                                       return element_less(x, y);
                                   });
        return static_cast<std::int16_t>(it - u.begin());
    };
    t.add.resize(static_cast<std::size_t>(t.n) * t.n);
    t.sub.resize(static_cast<std::size_t>(t.n) * t.n);
    for (int i = 0; i < t.n; ++i) {
        for (int j = 0; j < t.n; ++j) {
            t.add[static_cast<std::size_t>(i) * t.n + j] =
                index_of(ambient_add(u[i], u[j], ctx.plan.ambient));
            t.sub[static_cast<std::size_t>(i) * t.n + j] =
                index_of(ambient_sub(u[i], u[j], ctx.plan.ambient));
        }
    }
    t.identity = index_of(ambient_identity(ctx.plan.ambient));
    if (ctx.plan.family == ConstraintFamily::linear) {
        int max_scalar = std::max(ctx.plan.max_m, ctx.plan.max_n);
        t.scalar.resize(max_scalar + 1);
        for (int m = 0; m <= max_scalar; ++m) {
            t.scalar[m].resize(t.n);
            for (int i = 0; i < t.n; ++i) {
                t.scalar[m][i] = index_of(ambient_scalar_mul(m, u[i], ctx.plan.ambient));
            }
        }
    }
    return t;
}

struct FastBuffers {
    std::vector<std::int32_t> counts;
    std::vector<char> in_c;
    std::vector<std::int32_t> touched;
    std::vector<char> s_mask;
};

void run_fast_combo(const PlanContext& ctx, const FastTables& tables, FastBuffers& buf,
                    LocalAcc& acc, std::uint64_t combo_index, const std::vector<int>& a_idx,
                    const std::vector<int>& b_idx, const ConstraintDraw& draw) {
    buf.touched.clear();
    long long admissible_sums = 0;
    for (int ai : a_idx) {
        for (int bi : b_idx) {
            int s = tables.add_idx(ai, bi);
            if (buf.counts[s]++ == 0) buf.touched.push_back(s);
            bool ok = true;
            switch (draw.kind) {
                case Constraint::Kind::none:
                    break;
                case Constraint::Kind::distinct:
                    ok = ai != bi;
                    break;
                case Constraint::Kind::difference:
                case Constraint::Kind::poly:
                    ok = !buf.s_mask[tables.sub_idx(ai, bi)];
                    break;
                case Constraint::Kind::linear:
                    for (const auto& t : draw.triples) {
                        int lhs = tables.sub_idx(tables.scalar[t[0]][ai],
                                                 tables.scalar[t[1]][bi]);
                        if (lhs == t[2]) {
                            ok = false;
                            break;
                        }
                    }
                    break;
            }
            if (ok && !buf.in_c[s]) {
                buf.in_c[s] = 1;
                ++admissible_sums;
            }
        }
    }

    InstanceStats st;
    st.size_a = static_cast<long long>(a_idx.size());
    st.size_b = static_cast<long long>(b_idx.size());
    st.size_c = admissible_sums;
    st.kind = draw.kind;
    st.a_equals_b = a_idx == b_idx;
    switch (draw.kind) {
        case Constraint::Kind::distinct:
            st.s_size = 1;
            break;
        case Constraint::Kind::difference:
            st.s_size = static_cast<long long>(draw.subset.size());
            break;
        case Constraint::Kind::poly:
            // product of |S| distinct linear factors has total degree |S|
            st.poly_deg = static_cast<long long>(draw.subset.size());
            break;
        case Constraint::Kind::linear:
            for (const auto& t : draw.triples) st.linear_weight += t[0] + t[1];
            break;
        case Constraint::Kind::none:
            break;
    }
    long long min_ab = -1;
    long long min_c = -1;
    for (int s : buf.touched) {
        long long c = buf.counts[s];
        if (min_ab < 0 || c < min_ab) min_ab = c;
        if (buf.in_c[s] && (min_c < 0 || c < min_c)) min_c = c;
    }
    st.min_nu_ab = min_ab;
    if (min_c >= 0) st.min_nu_c = min_c;

    for (TheoremId id : ctx.plan.theorems) {
        BoundReport rep = evaluate_bound(id, ctx.traits, st);
        tally(acc, rep.verdict);
        bool want_violation = rep.verdict == Verdict::violated &&
                              acc.violations.size() < ctx.plan.violation_cap;
        bool want_tight = rep.verdict == Verdict::tight &&
                          acc.tights.size() < ctx.plan.tight_cap;
        if (want_violation || want_tight) {
            // rebuild through the element-level route; doubles as a cross-check
            Instance inst = materialize_instance(ctx, a_idx, b_idx, draw);
            BoundReport full = check_instance(id, inst);
            if (full.verdict != rep.verdict || full.predicted != rep.predicted ||
                full.actual != rep.actual) {
                throw Error("internal: fast sweep path disagrees with check_instance");
            }
            record_hits(ctx, acc, combo_index, id, full, inst, nullptr);
        }
    }

    for (int s : buf.touched) {
        buf.counts[s] = 0;
        buf.in_c[s] = 0;
    }
}

// -- worker loops --------------------------------------------------------------------

void run_exhaustive_range(const PlanContext& ctx, const FastTables* tables,
                          std::uint64_t outer_begin, std::uint64_t outer_end, LocalAcc& acc,
                          const SweepStreamFn& stream) {
    const int n = static_cast<int>(ctx.universe.size());
    SubsetStream a_stream(n, 1, ctx.plan.max_a, ctx.anchored);
    a_stream.seek(outer_begin);
    FastBuffers buf;
    if (tables) {
        buf.counts.assign(n, 0);
        buf.in_c.assign(n, 0);
        buf.s_mask.assign(n, 0);
    }
    for (std::uint64_t outer = outer_begin; outer < outer_end && !a_stream.at_end(); ++outer) {
        const std::uint64_t base = outer * ctx.inner_total;
        if (base >= ctx.combo_limit) break;
        const std::vector<int> a_idx = a_stream.current();
        ConstraintStream c_stream(ctx.plan, n);
        c_stream.seek_first();
        std::uint64_t c_index = 0;
        bool out_of_budget = false;
        while (!c_stream.at_end() && !out_of_budget) {
            ConstraintDraw draw = c_stream.current();
            std::optional<Constraint> constraint;
            if (!tables) {
                constraint = materialize_constraint(ctx, draw);
            } else if (draw.kind == Constraint::Kind::difference ||
                       draw.kind == Constraint::Kind::poly) {
                std::fill(buf.s_mask.begin(), buf.s_mask.end(), 0);
                for (int i : draw.subset) buf.s_mask[i] = 1;
            }
            SubsetStream b_stream(n, 1, ctx.plan.max_b, false);
            std::uint64_t b_index = 0;
            while (!b_stream.at_end()) {
                std::uint64_t combo = base + c_index * ctx.b_total + b_index;
                if (combo >= ctx.combo_limit) {
                    out_of_budget = true;
                    break;
                }
                if (tables) {
                    run_fast_combo(ctx, *tables, buf, acc, combo, a_idx, b_stream.current(),
                                   draw);
                } else {
                    run_generic_combo(ctx, acc, combo, a_idx, b_stream.current(), draw,
                                      *constraint, stream);
                }
                b_stream.advance();
                ++b_index;
            }
            c_stream.advance();
            ++c_index;
        }
        a_stream.advance();
    }
}

// -- sampled route ---------------------------------------------------------------------

FieldElement fe_from_index(std::int64_t v, const FieldSpec& spec) {
    std::vector<std::int64_t> c(spec.degree, 0);
    for (int i = 0; i < spec.degree; ++i) {
        c[i] = v % spec.p;
        v /= spec.p;
    }
    return FieldElement{std::move(c)};
}

Instance draw_sample(const PlanContext& ctx, std::mt19937_64& rng) {
    const int n = static_cast<int>(ctx.universe.size());
    auto draw_set = [&](int max_k) {
        int cap = std::min(max_k, n);
        int k = 1 + static_cast<int>(uniform_below(rng, cap));
        std::vector<Element> out;
        for (int i : sample_index_subset(rng, n, k)) out.push_back(ctx.universe[i]);
        return out;
    };
    std::vector<Element> a = draw_set(ctx.plan.max_a);
    std::vector<Element> b = draw_set(ctx.plan.max_b);
    Constraint constraint;
    switch (ctx.plan.family) {
        case ConstraintFamily::none:
            break;
        case ConstraintFamily::distinct:
            constraint = Constraint::make_distinct();
            break;
        case ConstraintFamily::difference: {
            int cap = std::min(ctx.plan.max_s, n);
            int s = 1 + static_cast<int>(uniform_below(rng, std::max(cap, 1)));
            std::vector<Element> set;
            for (int i : sample_index_subset(rng, n, s)) set.push_back(ctx.universe[i]);
            constraint = Constraint::make_difference(std::move(set), ctx.plan.ambient);
            break;
        }
        case ConstraintFamily::poly_difference: {
            const FieldSpec& f = field_of(ctx.plan.ambient);
            int cap = std::min(ctx.plan.max_s, n);
            int s = static_cast<int>(uniform_below(rng, cap + 1));
            std::vector<FieldElement> set;
            for (int i : sample_index_subset(rng, n, s)) {
                set.push_back(std::get<FieldElement>(ctx.universe[i]));
            }
            constraint = Constraint::make_poly(build_difference_poly(set, f));
            break;
        }
        case ConstraintFamily::linear: {
            int l = ctx.plan.max_l >= 1
                        ? 1 + static_cast<int>(uniform_below(rng, ctx.plan.max_l))
                        : 0;
            std::vector<LinearTerm> terms;
            for (int i = 0; i < l; ++i) {
                LinearTerm t;
                t.m = static_cast<std::int64_t>(uniform_below(rng, ctx.plan.max_m + 1));
                t.n = static_cast<std::int64_t>(uniform_below(rng, ctx.plan.max_n + 1));
                t.d = std::get<GroupElement>(
                    ctx.universe[uniform_below(rng, static_cast<std::uint64_t>(n))]);
                terms.push_back(std::move(t));
            }
            constraint = Constraint::make_linear(std::move(terms));
            break;
        }
        case ConstraintFamily::poly_random: {
            const FieldSpec& f = field_of(ctx.plan.ambient);
            MultiPoly p(f, 2);
            for (int i = 0; i <= ctx.plan.poly_degree; ++i) {
                for (int j = 0; i + j <= ctx.plan.poly_degree; ++j) {
                    std::int64_t v =
                        static_cast<std::int64_t>(uniform_below(rng, f.q()));
                    p.add_term({i, j}, fe_from_index(v, f));
                }
            }
            constraint = Constraint::make_poly(std::move(p));
            break;
        }
    }
    return make_instance(ctx.plan.ambient, std::move(a), std::move(b), std::move(constraint));
}

void run_sampled_range(const PlanContext& ctx, std::uint64_t begin, std::uint64_t end,
                       LocalAcc& acc, const SweepStreamFn& stream) {
    for (std::uint64_t i = begin; i < end; ++i) {
        auto rng = rng_for_sample(ctx.plan.seed, i);
        Instance inst = draw_sample(ctx, rng);
        SumsetAnalysis analysis = analyze_instance(inst);
        InstanceStats stats = instance_stats(inst, analysis);
        for (TheoremId id : ctx.plan.theorems) {
            BoundReport rep = evaluate_bound(id, ctx.traits, stats);
            tally(acc, rep.verdict);
            if (stream || rep.verdict == Verdict::violated || rep.verdict == Verdict::tight) {
                record_hits(ctx, acc, i, id, rep, inst, stream);
            }
        }
    }
}

PlanContext build_context(const SweepPlan& plan) {
    PlanContext ctx;
    ctx.plan = plan;
    if (plan.theorems.empty()) throw InvalidInput("sweep: at least one theorem required");
    if (plan.max_a < 1 || plan.max_b < 1) throw InvalidInput("sweep: size caps must be >= 1");
    if (plan.instance_cap < 1) throw InvalidInput("sweep: instance cap must be >= 1");
    switch (plan.family) {
        case ConstraintFamily::linear:
            if (is_field_ambient(plan.ambient)) {
                throw InvalidInput("sweep: the linear family needs a group ambient");
            }
            if (plan.max_l < 0 || plan.max_m < 0 || plan.max_n < 0) {
                throw InvalidInput("sweep: linear caps must be nonnegative");
            }
            break;
        case ConstraintFamily::poly_difference:
        case ConstraintFamily::poly_random:
            if (!is_field_ambient(plan.ambient)) {
                throw InvalidInput("sweep: polynomial families need a field ambient");
            }
            break;
        case ConstraintFamily::difference:
            if (plan.max_s < 1) throw InvalidInput("sweep: max_s must be >= 1");
            break;
        default:
            break;
    }
    ctx.universe = sweep_universe(plan.ambient, plan.box);
    ctx.traits = ambient_traits(plan.ambient);
    bool free_rank = !is_field_ambient(plan.ambient) && group_of(plan.ambient).free_rank > 0;
    ctx.anchored = free_rank && (plan.family == ConstraintFamily::distinct ||
                                 plan.family == ConstraintFamily::difference);
    if (!plan.samples) {
        const int n = static_cast<int>(ctx.universe.size());
        ctx.outer_total = SubsetStream(n, 1, plan.max_a, ctx.anchored).total();
        ctx.b_total = SubsetStream(n, 1, plan.max_b, false).total();
        ctx.c_total = ConstraintStream(plan, n).total();
        ctx.inner_total = sat_mul(ctx.c_total, ctx.b_total);
        ctx.combo_total = sat_mul(ctx.outer_total, ctx.inner_total);
        ctx.combo_limit = std::min(ctx.combo_total, plan.instance_cap);
        bool fast_capable = ctx.universe.size() <= kFastPathMaxUniverse && !free_rank &&
                            plan.family != ConstraintFamily::poly_random;
        switch (plan.path) {
            case SweepPlan::Path::automatic: ctx.use_fast = fast_capable; break;
            case SweepPlan::Path::fast:
                if (!fast_capable) {
                    throw InvalidInput("sweep: fast path unavailable for this plan");
                }
                ctx.use_fast = true;
                break;
            case SweepPlan::Path::generic: ctx.use_fast = false; break;
        }
    }
    return ctx;
}

} // namespace

int resolve_workers(int requested) {
    if (requested > 0) return std::min(requested, 64);
    if (const char* env = std::getenv("SUMSET_LAB_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 64L));
    }
    unsigned hc = std::thread::hardware_concurrency();
    if (hc == 0) return 1;
    return static_cast<int>(std::min(hc, 16u));
}

std::vector<Element> sweep_universe(const Ambient& ambient, int box) {
    if (is_field_ambient(ambient)) {
        const FieldSpec& f = field_of(ambient);
        if (f.is_rationals()) {
            throw InvalidInput("sweep_universe: the rationals cannot be enumerated");
        }
        return enumerate_ambient(ambient);
    }
    const GroupSpec& g = group_of(ambient);
    if (g.is_finite()) return enumerate_ambient(ambient);
    if (box < 1) throw InvalidInput("sweep_universe: free rank needs a box bound >= 1");
    // free coordinates range over [-box, box], most significant first
    std::vector<GroupElement> torsion = enumerate_group(GroupSpec{0, g.invariant_factors});
    const std::int64_t width = 2 * static_cast<std::int64_t>(box) + 1;
    double size = static_cast<double>(torsion.size());
    for (int i = 0; i < g.free_rank; ++i) size *= static_cast<double>(width);
    if (size > 200000) throw ResourceLimit("sweep_universe: boxed universe exceeds 2*10^5");
    std::vector<Element> out;
    std::vector<std::int64_t> coords(g.free_rank, -box);
    while (true) {
        for (const auto& t : torsion) {
            GroupElement e;
            e.free_part.assign(coords.begin(), coords.end());
            e.torsion_part = t.torsion_part;
            out.emplace_back(std::move(e));
        }
        int i = g.free_rank - 1;
        while (i >= 0 && coords[i] == box) {
            coords[i] = -box;
            --i;
        }
        if (i < 0) break;
        ++coords[i];
    }
    return out;
}

std::vector<std::vector<Element>> enumerate_subsets(const Ambient& ambient, int k,
                                                    std::optional<int> box) {
    if (k < 1) throw InvalidInput("enumerate_subsets: k must be >= 1");
    std::vector<Element> universe = sweep_universe(ambient, box.value_or(0));
    const int n = static_cast<int>(universe.size());
    if (k > n) throw InvalidInput("enumerate_subsets: k exceeds the universe size");
    if (binom(n, k) > 1000000) {
        throw ResourceLimit("enumerate_subsets: more than 10^6 subsets");
    }
    std::vector<std::vector<Element>> out;
    SubsetStream stream(n, k, k, false);
    while (!stream.at_end()) {
        std::vector<Element> s;
        s.reserve(k);
        for (int i : stream.current()) s.push_back(universe[i]);
        out.push_back(std::move(s));
        stream.advance();
    }
    return out;
}

SweepReport sweep(const SweepPlan& plan, const SweepStreamFn& stream) {
    auto t0 = std::chrono::steady_clock::now();
    PlanContext ctx = build_context(plan);
    int workers = resolve_workers(plan.workers);
    if (stream) {
        workers = 1;
        ctx.use_fast = false;
    }

    std::vector<LocalAcc> results;
    SweepReport report;

    if (plan.samples) {
        std::uint64_t n_samples = std::min(*plan.samples, plan.instance_cap);
        report.partial = n_samples < *plan.samples;
        workers = static_cast<int>(
            std::min<std::uint64_t>(workers, std::max<std::uint64_t>(n_samples, 1)));
        results.resize(workers);
        std::uint64_t chunk = (n_samples + workers - 1) / workers;
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            std::uint64_t begin = chunk * w;
            std::uint64_t end = std::min(n_samples, begin + chunk);
            if (begin >= end) continue;
            if (workers == 1) {
                run_sampled_range(ctx, begin, end, results[w], stream);
            } else {
                pool.emplace_back([&, w, begin, end] {
                    run_sampled_range(ctx, begin, end, results[w], nullptr);
                });
            }
        }
        for (auto& th : pool) th.join();
    } else {
        report.partial = ctx.combo_total > ctx.combo_limit;
        std::optional<FastTables> tables;
        if (ctx.use_fast) tables = build_tables(ctx);
        // partition the outer subset stream into contiguous chunks
        std::uint64_t outer_needed = ctx.outer_total;
        if (ctx.inner_total > 0) {
            outer_needed = std::min<std::uint64_t>(
                ctx.outer_total,
                (ctx.combo_limit + ctx.inner_total - 1) / ctx.inner_total);
        }
        workers = static_cast<int>(
            std::min<std::uint64_t>(workers, std::max<std::uint64_t>(outer_needed, 1)));
        results.resize(workers);
        std::uint64_t chunk = (outer_needed + workers - 1) / workers;
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            std::uint64_t begin = chunk * w;
            std::uint64_t end = std::min(outer_needed, begin + chunk);
            if (begin >= end) continue;
            const FastTables* tp = tables ? &*tables : nullptr;
            if (workers == 1) {
                run_exhaustive_range(ctx, tp, begin, end, results[w], stream);
            } else {
                pool.emplace_back([&, tp, w, begin, end] {
                    run_exhaustive_range(ctx, tp, begin, end, results[w], nullptr);
                });
            }
        }
        for (auto& th : pool) th.join();
    }

    for (auto& acc : results) {
        report.instances_checked += acc.checked;
        report.satisfied += acc.satisfied;
        report.tight += acc.tight;
        report.violated += acc.violated;
        report.not_applicable += acc.not_applicable;
        for (auto& h : acc.violations) {
            if (report.violations.size() < plan.violation_cap) {
                report.violations.push_back(std::move(h));
            }
        }
        for (auto& h : acc.tights) {
            if (report.tight_instances.size() < plan.tight_cap) {
                report.tight_instances.push_back(std::move(h));
            }
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::optional<SweepHit> hunt_lev_counterexample(const GroupSpec& spec, int max_a, int max_b,
                                                std::uint64_t instance_cap, int workers) {
    if (!spec.is_finite()) {
        throw InvalidInput("hunt_lev_counterexample: the group must be finite");
    }
    BigInt order = spec.order();
    if (order > 1000000) throw ResourceLimit("hunt_lev_counterexample: group too large");
    int n = order.convert_to<int>();
    SweepPlan plan;
    plan.ambient = spec;
    plan.max_a = max_a > 0 ? max_a : n;
    plan.max_b = max_b > 0 ? max_b : n;
    plan.family = ConstraintFamily::distinct;
    plan.theorems = {TheoremId::lev_conjecture};
    plan.instance_cap = instance_cap;
    plan.tight_cap = 0;
    plan.violation_cap = 4;
    plan.workers = workers;
    SweepReport report = sweep(plan);
    if (report.violations.empty()) return std::nullopt;
    return report.violations.front();
}

} // namespace sumlab
