#include "closure.hpp"

#include <algorithm>
#include <mutex>

#include "uag/errors.hpp"

namespace uag::detail {

namespace {

std::int64_t ipow(std::int64_t b, int e, std::int64_t limit) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (b != 0 && r > limit / b) return -1;
        r *= b;
    }
    return r;
}

// Odometer over [0,count)^m visiting only tuples with at least one entry >=
// frontier, in lexicographic order. Returns false when exhausted.
bool next_frontier_tuple(std::vector<int>& idx, int count, int frontier) {
    const int m = static_cast<int>(idx.size());
    for (int j = m - 1; j >= 0; --j) {
        if (++idx[j] < count) {
            // keep the frontier constraint satisfiable: if all fixed entries
            // are below the frontier, the last position must reach it
            bool any_high = false;
            for (int t = 0; t < m - 1 && !any_high; ++t) any_high = idx[t] >= frontier;
            if (!any_high && j == m - 1 && idx[j] < frontier) idx[j] = frontier;
            if (idx[j] >= count) continue;
            return true;
        }
        idx[j] = 0;
    }
    return false;
}

bool first_frontier_tuple(std::vector<int>& idx, int count, int frontier) {
    const int m = static_cast<int>(idx.size());
    if (m == 0 || count == 0) return false;
    std::fill(idx.begin(), idx.end(), 0);
    if (frontier > 0) {
        if (frontier >= count) return false;
        idx[m - 1] = frontier; // lex-least tuple touching the frontier
    }
    return true;
}

// ---- encoded fast path: functions as base-k digit codes ----

struct Encoded {
    int k, P;
    std::uint32_t codes_total; // k^P
    int lo_digits, hi_digits;
    std::uint32_t lo_total, hi_total;

    std::uint32_t encode(const std::vector<int>& vec) const {
        std::uint32_t c = 0;
        for (int i = P - 1; i >= 0; --i) c = c * static_cast<std::uint32_t>(k) + static_cast<std::uint32_t>(vec[i]);
        return c;
    }
    std::vector<int> decode(std::uint32_t c) const {
        std::vector<int> vec(static_cast<std::size_t>(P));
        for (int i = 0; i < P; ++i) {
            vec[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint32_t>(k));
            c /= static_cast<std::uint32_t>(k);
        }
        return vec;
    }
};

} // namespace

std::vector<Point> all_points(int k, int n, const RunConfig& cfg) {
    std::int64_t total = ipow(k, n, cfg.max_enumeration);
    if (total < 0) throw CapacityError("|A|^n exceeds max_enumeration");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(total));
    Point p(static_cast<std::size_t>(n), 0);
    for (std::int64_t i = 0; i < total; ++i) {
        pts.push_back(p);
        for (int j = n - 1; j >= 0; --j) {
            if (++p[static_cast<std::size_t>(j)] < k) break;
            p[static_cast<std::size_t>(j)] = 0;
        }
    }
    return pts;
}

ColumnClosure closure_over_columns(const FiniteAlgebra& a, int n, std::span<const Point> columns,
                                   const RunConfig& cfg, int depth_limit) {
    const int k = a.size;
    const int P = static_cast<int>(columns.size());
    TermArena& arena = TermArena::global();

    ColumnClosure out;
    out.k = k;
    out.n = n;
    out.num_columns = P;

    const std::int64_t code_space = ipow(k, P, 65536);
    const bool encoded = P >= 1 && code_space > 0;
    Encoded enc;
    std::vector<std::int32_t> code_index; // code -> element or -1
    std::vector<std::uint32_t> elem_code;
    std::vector<std::uint32_t> elem_lo, elem_hi;
    std::vector<std::vector<std::uint32_t>> op_lo, op_hi; // arity-2 chunk tables
    std::vector<std::vector<std::uint32_t>> op_unary;     // arity-1 full tables

    if (encoded) {
        enc.k = k;
        enc.P = P;
        enc.codes_total = static_cast<std::uint32_t>(code_space);
        enc.lo_digits = (P + 1) / 2;
        enc.hi_digits = P - enc.lo_digits;
        enc.lo_total = static_cast<std::uint32_t>(ipow(k, enc.lo_digits, 1 << 30));
        enc.hi_total = static_cast<std::uint32_t>(ipow(k, enc.hi_digits, 1 << 30));
        code_index.assign(enc.codes_total, -1);
        op_lo.resize(static_cast<std::size_t>(a.num_ops()));
        op_hi.resize(static_cast<std::size_t>(a.num_ops()));
        op_unary.resize(static_cast<std::size_t>(a.num_ops()));
        auto build_chunk = [&](int op, std::uint32_t total, int digits) {
            std::vector<std::uint32_t> t(static_cast<std::size_t>(total) * total);
            for (std::uint32_t x = 0; x < total; ++x)
                for (std::uint32_t y = 0; y < total; ++y) {
                    std::uint32_t xv = x, yv = y, r = 0, m = 1;
                    for (int d = 0; d < digits; ++d) {
                        int args[2] = {static_cast<int>(xv % static_cast<std::uint32_t>(k)),
                                       static_cast<int>(yv % static_cast<std::uint32_t>(k))};
                        r += static_cast<std::uint32_t>(a.op_apply(op, args)) * m;
                        xv /= static_cast<std::uint32_t>(k);
                        yv /= static_cast<std::uint32_t>(k);
                        m *= static_cast<std::uint32_t>(k);
                    }
                    t[static_cast<std::size_t>(x) * total + y] = r;
                }
            return t;
        };
        for (int op = 0; op < a.num_ops(); ++op) {
            if (a.op_arity(op) == 2) {
                op_lo[static_cast<std::size_t>(op)] = build_chunk(op, enc.lo_total, enc.lo_digits);
                if (enc.hi_digits > 0)
                    op_hi[static_cast<std::size_t>(op)] = build_chunk(op, enc.hi_total, enc.hi_digits);
            } else if (a.op_arity(op) == 1) {
                std::vector<std::uint32_t> t(enc.codes_total);
                for (std::uint32_t x = 0; x < enc.codes_total; ++x) {
                    std::uint32_t xv = x, r = 0, m = 1;
                    for (int d = 0; d < P; ++d) {
                        int arg = static_cast<int>(xv % static_cast<std::uint32_t>(k));
                        r += static_cast<std::uint32_t>(a.op_apply(op, {&arg, 1})) * m;
                        xv /= static_cast<std::uint32_t>(k);
                        m *= static_cast<std::uint32_t>(k);
                    }
                    t[x] = r;
                }
                op_unary[static_cast<std::size_t>(op)] = std::move(t);
            }
        }
    }

    auto add_element = [&](std::vector<int>&& vec, TermId w, int d, Derivation deriv) -> int {
        std::string key = ColumnClosure::key_of(vec);
        auto it = out.index.find(key);
        if (it != out.index.end()) return it->second;
        int id = static_cast<int>(out.elems.size());
        if (static_cast<std::int64_t>(id) + 1 > cfg.max_closure)
            throw CapacityError("term-function closure exceeds max_closure (" +
                                std::to_string(cfg.max_closure) + ")");
        out.index.emplace(std::move(key), id);
        if (encoded) {
            std::uint32_t c = enc.encode(vec);
            code_index[c] = id;
            elem_code.push_back(c);
            elem_lo.push_back(c % enc.lo_total);
            elem_hi.push_back(c / enc.lo_total);
        }
        out.elems.push_back(std::move(vec));
        out.witness.push_back(w);
        out.depth.push_back(d);
        out.derivations.push_back(std::move(deriv));
        return id;
    };

    // seeds: coordinate functions, then constants
    for (int i = 0; i < n; ++i) {
        std::vector<int> vec(static_cast<std::size_t>(P));
        for (int c = 0; c < P; ++c) vec[static_cast<std::size_t>(c)] = columns[c][static_cast<std::size_t>(i)];
        int id = add_element(std::move(vec), arena.var(i), 0, Derivation{Derivation::Kind::Seed, -1, {}});
        out.coord_elem.push_back(id);
    }
    for (int op = 0; op < a.num_ops(); ++op) {
        if (a.op_arity(op) != 0) continue;
        int v = a.op_apply(op, {});
        std::vector<int> vec(static_cast<std::size_t>(P), v);
        add_element(std::move(vec), arena.constant(a.sig.symbols[op].name), 0,
                    Derivation{Derivation::Kind::Op, op, {}});
    }

    // BFS rounds: each round applies every operation to tuples touching the
    // previous layer
    int round = 0;
    int layer_start = 0;
    int layer_end = static_cast<int>(out.elems.size());
    while (layer_start < layer_end) {
        if (depth_limit >= 0 && round >= depth_limit) {
            // growth not exhausted; mark and stop
            out.depth_limited = true;
            break;
        }
        ++round;
        const int frontier = layer_start;
        const int count = layer_end;
        for (int op = 0; op < a.num_ops(); ++op) {
            const int m = a.op_arity(op);
            if (m == 0) continue;
            std::vector<int> idx(static_cast<std::size_t>(m));
            if (!first_frontier_tuple(idx, count, frontier)) continue;
            std::vector<int> args(static_cast<std::size_t>(m));
            do {
                TermId w = 0;
                int id_existing = -1;
                if (encoded && m == 2) {
                    std::uint32_t lo = op_lo[static_cast<std::size_t>(op)]
                                            [static_cast<std::size_t>(elem_lo[idx[0]]) * enc.lo_total + elem_lo[idx[1]]];
                    std::uint32_t hi = enc.hi_digits
                                           ? op_hi[static_cast<std::size_t>(op)]
                                                  [static_cast<std::size_t>(elem_hi[idx[0]]) * enc.hi_total + elem_hi[idx[1]]]
                                           : 0;
                    std::uint32_t code = lo + hi * enc.lo_total;
                    id_existing = code_index[code];
                    if (id_existing < 0) {
                        std::vector<TermId> ws{out.witness[idx[0]], out.witness[idx[1]]};
                        w = arena.app(a.sig.symbols[op].name, ws);
                        add_element(enc.decode(code), w, round,
                                    Derivation{Derivation::Kind::Op, op, idx});
                    }
                } else if (encoded && m == 1) {
                    std::uint32_t code = op_unary[static_cast<std::size_t>(op)][elem_code[idx[0]]];
                    id_existing = code_index[code];
                    if (id_existing < 0) {
                        std::vector<TermId> ws{out.witness[idx[0]]};
                        w = arena.app(a.sig.symbols[op].name, ws);
                        add_element(enc.decode(code), w, round,
                                    Derivation{Derivation::Kind::Op, op, idx});
                    }
                } else {
                    std::vector<int> vec(static_cast<std::size_t>(P));
                    for (int c = 0; c < P; ++c) {
                        for (int j = 0; j < m; ++j) args[static_cast<std::size_t>(j)] = out.elems[idx[j]][static_cast<std::size_t>(c)];
                        vec[static_cast<std::size_t>(c)] = a.op_apply(op, args);
                    }
                    if (out.index.find(ColumnClosure::key_of(vec)) == out.index.end()) {
                        std::vector<TermId> ws;
                        for (int j = 0; j < m; ++j) ws.push_back(out.witness[idx[j]]);
                        w = arena.app(a.sig.symbols[op].name, ws);
                        add_element(std::move(vec), w, round,
                                    Derivation{Derivation::Kind::Op, op, idx});
                    }
                }
            } while (next_frontier_tuple(idx, count, frontier));
        }
        layer_start = count;
        layer_end = static_cast<int>(out.elems.size());
    }

    if (out.elems.empty()) {
        // no columns, no coordinates cannot happen (n >= 1); with zero
        // columns all functions coincide and one seed element exists
        throw PreconditionError("term-function closure is empty");
    }
    return out;
}

bool full_space_feasible(const FiniteAlgebra& a, int n) {
    std::int64_t points = ipow(a.size, n, 10);
    if (points < 0) return false;
    return ipow(a.size, static_cast<int>(points), 65536) > 0;
}

std::uint64_t algebra_fingerprint(const FiniteAlgebra& a) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(a.size));
    for (const auto& s : a.sig.symbols) {
        for (char c : s.name) mix(static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
        mix(static_cast<std::uint64_t>(s.arity));
    }
    for (const auto& t : a.tables)
        for (int v : t) mix(static_cast<std::uint64_t>(v));
    return h;
}

std::shared_ptr<const ColumnClosure> full_space_functions(const FiniteAlgebra& a, int n,
                                                          const RunConfig& cfg) {
    struct Entry {
        FiniteAlgebra algebra;
        int n;
        std::shared_ptr<const ColumnClosure> closure;
    };
    static std::mutex mu;
    static std::unordered_map<std::uint64_t, std::vector<Entry>> cache;

    std::uint64_t key = algebra_fingerprint(a) * 1000003u + static_cast<std::uint64_t>(n);
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end())
            for (const Entry& e : it->second)
                if (e.n == n && e.algebra == a) {
                    if (static_cast<std::int64_t>(e.closure->elems.size()) > cfg.max_closure)
                        throw CapacityError("term-function closure exceeds max_closure");
                    return e.closure;
                }
    }
    std::vector<Point> pts = all_points(a.size, n, cfg);
    auto closure = std::make_shared<ColumnClosure>(closure_over_columns(a, n, pts, cfg));
    {
        std::lock_guard lock(mu);
        cache[key].push_back(Entry{a, n, closure});
    }
    return closure;
}

} // namespace uag::detail
