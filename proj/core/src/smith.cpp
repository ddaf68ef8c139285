#include <algorithm>
#include <cstdlib>
#include <queue>

#include "domino/homology.hpp"

namespace domino {
namespace detail {

namespace {

struct Overflow {};

// arithmetic shims so the sparse elimination below can run on checked
// int64 first and fall back to exact big integers when entries grow
inline long long mul_sub(long long a, long long k, long long b) {
    // a - k*b with range check
    __int128 r = static_cast<__int128>(a) - static_cast<__int128>(k) * b;
    if (r > INT64_MAX || r < INT64_MIN) throw Overflow{};
    return static_cast<long long>(r);
}
inline BigInt mul_sub(const BigInt& a, const BigInt& k, const BigInt& b) { return a - k * b; }

inline bool is_unit(long long v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

template <typename T>
struct SparseState {
    std::vector<std::vector<std::pair<int, T>>> rows;  // sorted by column
    std::vector<int> col_nnz;
    std::vector<std::vector<int>> col_rows;  // may hold stale row ids
    std::vector<char> row_active;
    std::vector<int> dirty_cols;  // columns whose nnz changed since last drain

    const T* value_at(int r, int c) const {
        const auto& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const std::pair<int, T>& e, int col) { return e.first < col; });
        if (it == row.end() || it->first != c) return nullptr;
        return &it->second;
    }
};

// row_r -= k * row_p, maintaining the column index
template <typename T>
void row_axpy(SparseState<T>& s, int r, const T& k, int p) {
    const auto& src = s.rows[p];
    const auto& dst = s.rows[r];
    std::vector<std::pair<int, T>> merged;
    merged.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            merged.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            T v = mul_sub(T(0), k, src[j].second);
            if (v != 0) {
                ++s.col_nnz[src[j].first];
                s.col_rows[src[j].first].push_back(r);
                s.dirty_cols.push_back(src[j].first);
                merged.emplace_back(src[j].first, std::move(v));
            }
            ++j;
        } else {
            T v = mul_sub(dst[i].second, k, src[j].second);
            if (v == 0) {
                --s.col_nnz[dst[i].first];
                s.dirty_cols.push_back(dst[i].first);
            } else {
                merged.emplace_back(dst[i].first, std::move(v));
            }
            ++i;
            ++j;
        }
    }
    s.rows[r] = std::move(merged);
}

// prune stale ids from col_rows[c]; returns the unit-valued row with minimal
// row nnz (ties to the smaller row id), or -1
template <typename T>
int best_unit_row(SparseState<T>& s, int c) {
    auto& cand = s.col_rows[c];
    std::vector<int> valid;
    valid.reserve(cand.size());
    int best_row = -1;
    std::size_t best_nnz = 0;
    for (int r : cand) {
        if (!s.row_active[r]) continue;
        const T* v = s.value_at(r, c);
        if (!v) continue;
        if (!valid.empty() && valid.back() == r) continue;  // duplicate push
        valid.push_back(r);
        if (!is_unit(*v)) continue;
        if (best_row == -1 || s.rows[r].size() < best_nnz ||
            (s.rows[r].size() == best_nnz && r < best_row)) {
            best_row = r;
            best_nnz = s.rows[r].size();
        }
    }
    cand = std::move(valid);
    return best_row;
}

// peel off ±1 pivots with unimodular row operations; returns the pivot count
// and leaves the irreducible remainder in `s`
template <typename T>
long long eliminate_units(SparseState<T>& s, int ncols) {
    long long pivots = 0;
    using Key = std::pair<int, int>;  // (nnz, col)
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> heap;
    for (int c = 0; c < ncols; ++c)
        if (s.col_nnz[c] > 0) heap.emplace(s.col_nnz[c], c);

    std::vector<Key> stash;  // valid columns that currently hold no unit entry
    while (true) {
        int pr = -1, pc = -1;
        stash.clear();
        while (!heap.empty()) {
            auto [nnz, c] = heap.top();
            heap.pop();
            if (s.col_nnz[c] != nnz || nnz == 0) continue;  // stale key
            int r = best_unit_row(s, c);
            if (r < 0) {
                stash.emplace_back(nnz, c);
                continue;
            }
            pr = r;
            pc = c;
            break;
        }
        for (const Key& k : stash) heap.push(k);
        if (pr < 0) break;  // no unit entries left anywhere

        const T pivot = *s.value_at(pr, pc);
        std::vector<int> targets = s.col_rows[pc];  // pruned by best_unit_row
        for (int r : targets) {
            if (r == pr) continue;
            const T* a = s.value_at(r, pc);
            if (!a) continue;
            T k = *a * pivot;  // row_r -= (a*pivot)*row_pr zeroes column pc
            row_axpy(s, r, k, pr);
        }
        s.row_active[pr] = 0;
        for (const auto& e : s.rows[pr]) {
            --s.col_nnz[e.first];
            s.dirty_cols.push_back(e.first);
        }
        s.rows[pr].clear();
        ++pivots;
        for (int c : s.dirty_cols)
            if (s.col_nnz[c] > 0) heap.emplace(s.col_nnz[c], c);
        s.dirty_cols.clear();
    }
    return pivots;
}

template <typename T>
std::vector<std::vector<BigInt>> collect_remainder(const SparseState<T>& s, int ncols) {
    std::vector<int> cols;
    for (int c = 0; c < ncols; ++c)
        if (s.col_nnz[c] > 0) cols.push_back(c);
    std::vector<int> col_pos(ncols, -1);
    for (std::size_t i = 0; i < cols.size(); ++i) col_pos[cols[i]] = static_cast<int>(i);
    std::vector<std::vector<BigInt>> dense;
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        if (!s.row_active[r] || s.rows[r].empty()) continue;
        std::vector<BigInt> row(cols.size(), 0);
        for (const auto& [c, v] : s.rows[r]) row[col_pos[c]] = BigInt(v);
        dense.push_back(std::move(row));
    }
    return dense;
}

template <typename T, typename Src>
SparseState<T> make_state(const Src& rows_in, int ncols) {
    SparseState<T> s;
    s.rows.resize(rows_in.size());
    s.col_nnz.assign(ncols, 0);
    s.col_rows.resize(ncols);
    s.row_active.assign(rows_in.size(), 1);
    for (std::size_t r = 0; r < rows_in.size(); ++r) {
        for (const auto& [c, v] : rows_in[r]) {
            s.rows[r].emplace_back(c, T(v));
            ++s.col_nnz[c];
            s.col_rows[c].push_back(static_cast<int>(r));
        }
    }
    return s;
}

// dense SNF on the (small) remainder; minimum-absolute-value pivoting and
// the usual divisibility fix-up
std::vector<BigInt> dense_snf(std::vector<std::vector<BigInt>> m) {
    std::vector<BigInt> factors;
    if (m.empty() || m[0].empty()) return factors;
    std::size_t nr = m.size(), nc = m[0].size();
    std::size_t t = 0;
    while (t < nr && t < nc) {
        std::size_t pi = t, pj = t;
        bool found = false;
        BigInt best = 0;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j) {
                if (m[i][j] == 0) continue;
                BigInt a = abs(m[i][j]);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < nr; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (m[i][t] == 0) continue;
                BigInt q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < nc; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (m[t][j] == 0) continue;
                BigInt q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < nr; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = t; i < nr; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
        }
        // m[t][t] must divide everything below-right
        bool again = false;
        for (std::size_t i = t + 1; i < nr && !again; ++i)
            for (std::size_t j = t + 1; j < nc && !again; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (std::size_t jj = t; jj < nc; ++jj) m[t][jj] += m[i][jj];
                    again = true;
                }
        if (again) continue;
        factors.push_back(abs(m[t][t]));
        ++t;
    }
    return factors;
}

}  // namespace

long long bareiss_rank(std::vector<std::vector<BigInt>> m) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t nr = m.size(), nc = m[0].size();
    BigInt prev = 1;
    std::size_t t = 0;
    while (t < nr && t < nc) {
        std::size_t pi = t;
        while (pi < nr && m[pi][t] == 0) ++pi;
        if (pi == nr) {
            // column exhausted: rotate it out
            bool any = false;
            for (std::size_t j = t + 1; j < nc && !any; ++j)
                for (std::size_t i = t; i < nr && !any; ++i)
                    if (m[i][j] != 0) {
                        for (std::size_t ii = 0; ii < nr; ++ii) std::swap(m[ii][t], m[ii][j]);
                        any = true;
                    }
            if (!any) break;
            continue;
        }
        std::swap(m[t], m[pi]);
        for (std::size_t i = t + 1; i < nr; ++i) {
            for (std::size_t j = t + 1; j < nc; ++j)
                m[i][j] = (m[i][j] * m[t][t] - m[i][t] * m[t][j]) / prev;
            m[i][t] = 0;
        }
        prev = m[t][t];
        ++t;
    }
    return static_cast<long long>(t);
}

long long modular_rank(const std::vector<std::vector<BigInt>>& m, int p) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t nr = m.size(), nc = m[0].size();
    std::vector<std::vector<long long>> a(nr, std::vector<long long>(nc));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) {
            BigInt r = m[i][j] % p;
            if (r < 0) r += p;
            a[i][j] = static_cast<long long>(r);
        }
    long long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[row], a[piv]);
        // normalize pivot to 1 via Fermat inverse
        long long inv = 1, base = a[row][col] % p, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t j = col; j < nc; ++j) a[row][j] = a[row][j] * inv % p;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || a[i][col] == 0) continue;
            long long f = a[i][col];
            for (std::size_t j = col; j < nc; ++j) a[i][j] = ((a[i][j] - f * a[row][j]) % p + p) % p;
        }
        ++row;
        ++rank;
    }
    return rank;
}

BoundaryReduction::BoundaryReduction(const std::vector<std::vector<ChainComplex::Entry>>& columns,
                                     int nrows) {
    // transpose the column view into rows
    std::vector<std::vector<std::pair<int, long long>>> rows(nrows);
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& e : columns[c]) rows[e.row].emplace_back(static_cast<int>(c), e.value);
    for (auto& row : rows) std::sort(row.begin(), row.end());
    run_int64(std::move(rows), static_cast<int>(columns.size()));
}

BoundaryReduction::BoundaryReduction(const std::vector<std::vector<BigInt>>& m) {
    std::vector<std::vector<std::pair<int, BigInt>>> rows(m.size());
    int ncols = m.empty() ? 0 : static_cast<int>(m[0].size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (static_cast<int>(m[r].size()) != ncols)
            throw std::invalid_argument("ragged matrix");
        for (int c = 0; c < ncols; ++c)
            if (m[r][c] != 0) rows[r].emplace_back(c, m[r][c]);
    }
    run_big(std::move(rows), ncols);
}

void BoundaryReduction::run_int64(std::vector<std::vector<std::pair<int, long long>>> rows,
                                  int ncols) {
    auto state = make_state<long long>(rows, ncols);
    try {
        unit_pivots_ = eliminate_units(state, ncols);
        remainder_ = collect_remainder(state, ncols);
    } catch (const Overflow&) {
        // rare: redo the whole elimination with unbounded integers
        std::vector<std::vector<std::pair<int, BigInt>>> big(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [c, v] : rows[r]) big[r].emplace_back(c, BigInt(v));
        run_big(std::move(big), ncols);
    }
}

void BoundaryReduction::run_big(std::vector<std::vector<std::pair<int, BigInt>>> rows, int ncols) {
    auto state = make_state<BigInt>(rows, ncols);
    unit_pivots_ = eliminate_units(state, ncols);
    remainder_ = collect_remainder(state, ncols);
}

long long BoundaryReduction::rank(FieldSpec f) const {
    if (remainder_.empty()) return unit_pivots_;
    if (f.is_rationals()) return unit_pivots_ + bareiss_rank(remainder_);
    return unit_pivots_ + modular_rank(remainder_, f.characteristic);
}

std::vector<BigInt> BoundaryReduction::invariant_factors() const {
    std::vector<BigInt> factors(static_cast<std::size_t>(unit_pivots_), BigInt(1));
    auto rest = dense_snf(remainder_);
    factors.insert(factors.end(), rest.begin(), rest.end());
    return factors;
}

}  // namespace detail

SmithNormalForm smith_normal_form(const std::vector<std::vector<BigInt>>& m) {
    detail::BoundaryReduction red(m);
    SmithNormalForm out;
    out.invariant_factors = red.invariant_factors();
    out.rank = static_cast<int>(out.invariant_factors.size());
    return out;
}

SmithNormalForm smith_normal_form(const std::vector<std::vector<long long>>& m) {
    std::vector<std::vector<BigInt>> big(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) big[i].assign(m[i].begin(), m[i].end());
    return smith_normal_form(big);
}

}  // namespace domino
