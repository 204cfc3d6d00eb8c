#include "hallwright/brute.hpp"

#include "hallwright/interpolate.hpp"

#include <algorithm>
#include <numeric>

namespace hallwright {

QuiverShape QuiverShape::cyclic(int l) {
    QuiverShape s;
    s.vertices = l + 1;
    for (int i = 0; i <= l; ++i) s.arrows.emplace_back(i, (i + 1) % (l + 1));
    s.nilpotent = true;
    return s;
}

QuiverShape QuiverShape::kronecker() {
    QuiverShape s;
    s.vertices = 2;
    s.arrows = {{0, 1}, {0, 1}};
    s.nilpotent = false;
    return s;
}

QuiverShape QuiverShape::reversed() const {
    QuiverShape s = *this;
    for (auto& [a, b] : s.arrows) std::swap(a, b);
    return s;
}

FMat FMat::identity(int n) {
    FMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FMat fmat_mul(const FiniteField& F, const FMat& x, const FMat& y) {
    check(x.cols == y.rows, "matrix shape mismatch");
    FMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            Fq c = x.at(i, k);
            if (c == 0) continue;
            const Fq* yr = &y.a[static_cast<size_t>(k) * y.cols];
            Fq* zr = &z.a[static_cast<size_t>(i) * z.cols];
            for (int j = 0; j < y.cols; ++j) zr[j] = F.add(zr[j], F.mul(c, yr[j]));
        }
    return z;
}

int fmat_rank(const FiniteField& F, FMat m) {
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int sel = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, c) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(rank, j));
        Fq inv = F.inv(m.at(rank, c));
        for (int j = c; j < m.cols; ++j) m.at(rank, j) = F.mul(m.at(rank, j), inv);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            Fq f = m.at(r, c);
            if (f == 0) continue;
            for (int j = c; j < m.cols; ++j)
                m.at(r, j) = F.sub(m.at(r, j), F.mul(f, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

void MatrixRep::validate() const {
    check(static_cast<int>(dims.size()) == shape.vertices, "per-vertex dimension list mismatch");
    check(mats.size() == shape.arrows.size(), "per-arrow matrix list mismatch");
    for (size_t a = 0; a < mats.size(); ++a) {
        check(mats[a].rows == dims[shape.arrows[a].first] &&
                  mats[a].cols == dims[shape.arrows[a].second],
              "arrow matrix shape mismatch");
    }
    if (shape.nilpotent) {
        // Every long enough path composite must vanish.
        const FiniteField& F = GF(q);
        int n = total(dims);
        for (int v = 0; v < shape.vertices; ++v) {
            std::vector<std::pair<int, FMat>> frontier{{v, FMat::identity(dims[v])}};
            for (int step = 0; step < n + 1; ++step) {
                std::vector<std::pair<int, FMat>> next;
                for (auto& [at, m] : frontier)
                    for (size_t a = 0; a < mats.size(); ++a)
                        if (shape.arrows[a].first == at)
                            next.emplace_back(shape.arrows[a].second, fmat_mul(F, m, mats[a]));
                frontier = std::move(next);
            }
            for (auto& [at, m] : frontier) {
                (void)at;
                check(std::all_of(m.a.begin(), m.a.end(), [](Fq c) { return c == 0; }),
                      "representation is not nilpotent");
            }
        }
    }
}

MatrixRep realize(const NilpotentModule& m, int q) {
    int n = m.vertices();
    MatrixRep rep;
    rep.shape = QuiverShape::cyclic(n - 1);
    rep.q = q;
    rep.dims = m.dim();
    // Index the segment boxes vertex by vertex in segment order.
    std::vector<std::vector<std::pair<int, int>>> boxes(n); // vertex -> (segment, step)
    const auto& segs = m.segments();
    for (size_t s = 0; s < segs.size(); ++s)
        for (int t = 0; t < segs[s].len; ++t)
            boxes[(segs[s].top + t) % n].emplace_back(static_cast<int>(s), t);
    for (int v = 0; v < n; ++v) {
        int w = (v + 1) % n;
        FMat mat(rep.dims[v], rep.dims[w]);
        for (size_t i = 0; i < boxes[v].size(); ++i) {
            auto [s, t] = boxes[v][i];
            if (t + 1 >= segs[s].len) continue;
            auto it = std::find(boxes[w].begin(), boxes[w].end(), std::make_pair(s, t + 1));
            mat.at(static_cast<int>(i), static_cast<int>(it - boxes[w].begin())) = 1;
        }
        rep.mats.push_back(std::move(mat));
    }
    return rep;
}

namespace {

std::vector<int> poly_pow_fq(const FiniteField& F, std::vector<int> base, int e) {
    std::vector<int> r{1};
    for (int k = 0; k < e; ++k) {
        std::vector<int> c(r.size() + base.size() - 1, 0);
        for (size_t i = 0; i < r.size(); ++i)
            for (size_t j = 0; j < base.size(); ++j)
                c[i + j] = F.add(static_cast<Fq>(c[i + j]),
                                 F.mul(static_cast<Fq>(r[i]), static_cast<Fq>(base[j])));
        r = std::move(c);
    }
    return r;
}

MatrixRep realize_indec(const KroneckerIndec& ind, int q) {
    MatrixRep rep;
    rep.shape = QuiverShape::kronecker();
    rep.q = q;
    DimVec d = ind.dim();
    rep.dims = d;
    FMat a(d[0], d[1]), b(d[0], d[1]);
    const FiniteField& F = GF(q);
    switch (ind.kind) {
        case KroneckerIndec::preproj: // (n, n+1): a shifts by 0, b by 1
            for (int i = 0; i < ind.n; ++i) {
                a.at(i, i) = 1;
                b.at(i, i + 1) = 1;
            }
            break;
        case KroneckerIndec::preinj: // (n+1, n): last/first basis vector dies
            for (int i = 0; i < ind.n; ++i) {
                a.at(i, i) = 1;
                b.at(i + 1, i) = 1;
            }
            break;
        case KroneckerIndec::regular:
            if (ind.x.inf) { // a nilpotent shift, b identity
                b = FMat::identity(d[0]);
                for (int i = 0; i + 1 < d[0]; ++i) a.at(i, i + 1) = 1;
            } else { // a identity, b the companion matrix of the point power
                a = FMat::identity(d[0]);
                std::vector<int> f = poly_pow_fq(F, ind.x.poly, ind.n);
                int n = d[0];
                for (int i = 0; i + 1 < n; ++i) b.at(i, i + 1) = 1;
                for (int j = 0; j < n; ++j) b.at(n - 1, j) = F.neg(static_cast<Fq>(f[j]));
            }
            break;
    }
    rep.mats = {std::move(a), std::move(b)};
    return rep;
}

} // namespace

MatrixRep direct_sum_rep(const MatrixRep& x, const MatrixRep& y) {
    check(x.shape == y.shape && x.q == y.q, "direct sum across different categories");
    MatrixRep rep;
    rep.shape = x.shape;
    rep.q = x.q;
    rep.dims = add(x.dims, y.dims);
    for (size_t a = 0; a < x.mats.size(); ++a) {
        auto [s, t] = x.shape.arrows[a];
        FMat m(rep.dims[s], rep.dims[t]);
        for (int i = 0; i < x.dims[s]; ++i)
            for (int j = 0; j < x.dims[t]; ++j) m.at(i, j) = x.mats[a].at(i, j);
        for (int i = 0; i < y.dims[s]; ++i)
            for (int j = 0; j < y.dims[t]; ++j)
                m.at(x.dims[s] + i, x.dims[t] + j) = y.mats[a].at(i, j);
        rep.mats.push_back(std::move(m));
    }
    return rep;
}

MatrixRep realize(const KroneckerClass& m, int q) {
    MatrixRep rep;
    rep.shape = QuiverShape::kronecker();
    rep.q = q;
    rep.dims = {0, 0};
    rep.mats = {FMat(0, 0), FMat(0, 0)};
    for (const auto& ind : m.summands()) rep = direct_sum_rep(rep, realize_indec(ind, q));
    return rep;
}

NilpotentModule classify_cyclic(const MatrixRep& x) {
    int n = x.shape.vertices;
    check(x.shape == QuiverShape::cyclic(n - 1), "classify_cyclic needs a cyclic shape");
    const FiniteField& F = GF(x.q);
    int len_max = x.total_dim();
    // ranks[i][a] = rank of the composite of a arrows starting at vertex i.
    std::vector<std::vector<int>> ranks(n, std::vector<int>(len_max + 2, 0));
    for (int i = 0; i < n; ++i) {
        ranks[i][0] = x.dims[i];
        FMat comp = FMat::identity(x.dims[i]);
        for (int a = 1; a <= len_max + 1; ++a) {
            comp = fmat_mul(F, comp, x.mats[(i + a - 1) % n]);
            ranks[i][a] = fmat_rank(F, comp);
            if (ranks[i][a] == 0) break; // stays zero from here on
        }
    }
    auto D = [&](int i, int a) {
        int ii = ((i % n) + n) % n;
        return ranks[ii][a - 1] - (a <= len_max + 1 ? ranks[ii][a] : 0);
    };
    std::vector<Segment> segs;
    for (int a = 1; a <= len_max; ++a)
        for (int i = 0; i < n; ++i) {
            int mult = D(i, a) - D(i - 1, a + 1);
            check(mult >= 0, "negative segment multiplicity: input not nilpotent?");
            for (int k = 0; k < mult; ++k) segs.push_back({i, a});
        }
    NilpotentModule m(n, std::move(segs));
    check(m.dim() == x.dims, "classification does not account for the whole module");
    return m;
}

int hom_dim_rep(const MatrixRep& x, const MatrixRep& y) {
    check(x.shape == y.shape && x.q == y.q, "Hom across different categories");
    const FiniteField& F = GF(x.q);
    // Unknowns: entries of f_v (x.dims[v] by y.dims[v]); equations per arrow:
    // M_x(a) f_t - f_s M_y(a) = 0.
    std::vector<int> offset(x.shape.vertices + 1, 0);
    for (int v = 0; v < x.shape.vertices; ++v)
        offset[v + 1] = offset[v] + x.dims[v] * y.dims[v];
    int unknowns = offset.back();
    if (unknowns == 0) return 0;
    std::vector<Fq> rows;
    int nrows = 0;
    for (size_t a = 0; a < x.mats.size(); ++a) {
        auto [s, t] = x.shape.arrows[a];
        for (int r = 0; r < x.dims[s]; ++r)
            for (int c = 0; c < y.dims[t]; ++c) {
                std::vector<Fq> eq(unknowns, 0);
                for (int k = 0; k < x.dims[t]; ++k)
                    eq[offset[t] + k * y.dims[t] + c] =
                        F.add(eq[offset[t] + k * y.dims[t] + c], x.mats[a].at(r, k));
                for (int k = 0; k < y.dims[s]; ++k)
                    eq[offset[s] + r * y.dims[s] + k] = F.sub(
                        eq[offset[s] + r * y.dims[s] + k], y.mats[a].at(k, c));
                rows.insert(rows.end(), eq.begin(), eq.end());
                ++nrows;
            }
    }
    FMat sys(nrows, unknowns);
    sys.a = std::move(rows);
    return unknowns - fmat_rank(F, std::move(sys));
}

namespace {

// Basis of the solution space of the intertwining system, as per-vertex maps.
std::vector<std::vector<FMat>> hom_basis(const MatrixRep& x, const MatrixRep& y) {
    const FiniteField& F = GF(x.q);
    std::vector<int> offset(x.shape.vertices + 1, 0);
    for (int v = 0; v < x.shape.vertices; ++v)
        offset[v + 1] = offset[v] + x.dims[v] * y.dims[v];
    int unknowns = offset.back();
    std::vector<std::vector<Fq>> eqs;
    for (size_t a = 0; a < x.mats.size(); ++a) {
        auto [s, t] = x.shape.arrows[a];
        for (int r = 0; r < x.dims[s]; ++r)
            for (int c = 0; c < y.dims[t]; ++c) {
                std::vector<Fq> eq(unknowns, 0);
                for (int k = 0; k < x.dims[t]; ++k)
                    eq[offset[t] + k * y.dims[t] + c] =
                        F.add(eq[offset[t] + k * y.dims[t] + c], x.mats[a].at(r, k));
                for (int k = 0; k < y.dims[s]; ++k)
                    eq[offset[s] + r * y.dims[s] + k] = F.sub(
                        eq[offset[s] + r * y.dims[s] + k], y.mats[a].at(k, c));
                eqs.push_back(std::move(eq));
            }
    }
    // Row reduce and read the kernel off the free columns.
    int rank = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < unknowns && rank < static_cast<int>(eqs.size()); ++c) {
        int sel = -1;
        for (int r = rank; r < static_cast<int>(eqs.size()); ++r)
            if (eqs[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(eqs[sel], eqs[rank]);
        Fq inv = F.inv(eqs[rank][c]);
        for (int j = 0; j < unknowns; ++j) eqs[rank][j] = F.mul(eqs[rank][j], inv);
        for (int r = 0; r < static_cast<int>(eqs.size()); ++r) {
            if (r == rank || eqs[r][c] == 0) continue;
            Fq f = eqs[r][c];
            for (int j = 0; j < unknowns; ++j)
                eqs[r][j] = F.sub(eqs[r][j], F.mul(f, eqs[rank][j]));
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<std::vector<FMat>> basis;
    std::vector<bool> is_pivot(unknowns, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int c = 0; c < unknowns; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Fq> sol(unknowns, 0);
        sol[c] = 1;
        for (int r = 0; r < rank; ++r)
            if (eqs[r][c] != 0) sol[pivot_col[r]] = F.neg(eqs[r][c]);
        std::vector<FMat> maps;
        for (int v = 0; v < x.shape.vertices; ++v) {
            FMat fm(x.dims[v], y.dims[v]);
            std::copy(sol.begin() + offset[v], sol.begin() + offset[v + 1], fm.a.begin());
            maps.push_back(std::move(fm));
        }
        basis.push_back(std::move(maps));
    }
    return basis;
}

} // namespace

bool is_isomorphic(const MatrixRep& x, const MatrixRep& y) {
    if (!(x.shape == y.shape) || x.q != y.q || x.dims != y.dims) return false;
    if (x.total_dim() == 0) return true;
    auto basis = hom_basis(x, y);
    const FiniteField& F = GF(x.q);
    size_t h = basis.size();
    long long combos = 1;
    for (size_t i = 0; i < h; ++i) {
        combos *= x.q;
        check(combos <= (1 << 22), "isomorphism search space too large");
    }
    std::vector<Fq> coef(h, 0);
    for (long long code = 1; code < combos; ++code) {
        long long t = code;
        for (size_t i = 0; i < h; ++i) {
            coef[i] = static_cast<Fq>(t % x.q);
            t /= x.q;
        }
        bool inv = true;
        for (int v = 0; v < x.shape.vertices && inv; ++v) {
            FMat f(x.dims[v], y.dims[v]);
            for (size_t i = 0; i < h; ++i) {
                if (coef[i] == 0) continue;
                for (size_t e = 0; e < f.a.size(); ++e)
                    f.a[e] = F.add(f.a[e], F.mul(coef[i], basis[i][v].a[e]));
            }
            inv = fmat_rank(F, std::move(f)) == x.dims[v];
        }
        if (inv) return true;
    }
    return false;
}

void for_each_subspace(int dim, int q, const std::function<void(const Subspace&)>& fn) {
    Subspace s;
    s.ambient = dim;
    fn(s); // the zero subspace
    for (int k = 1; k <= dim; ++k) {
        // Walk the pivot-column combinations in lexicographic order.
        std::vector<int> piv(k);
        std::iota(piv.begin(), piv.end(), 0);
        while (true) {
            // Free cells sit right of each pivot at non-pivot columns.
            std::vector<std::pair<int, int>> cells;
            std::vector<bool> is_piv(dim, false);
            for (int p : piv) is_piv[p] = true;
            for (int i = 0; i < k; ++i)
                for (int c = piv[i] + 1; c < dim; ++c)
                    if (!is_piv[c]) cells.emplace_back(i, c);
            s.dim = k;
            s.pivots = piv;
            s.rows.assign(static_cast<size_t>(k) * dim, 0);
            for (int i = 0; i < k; ++i) s.rows[static_cast<size_t>(i) * dim + piv[i]] = 1;
            // Odometer over the free cells.
            std::vector<int> digit(cells.size(), 0);
            while (true) {
                fn(s);
                size_t pos = 0;
                while (pos < cells.size()) {
                    auto [r, c] = cells[pos];
                    int d = ++digit[pos];
                    if (d < q) {
                        s.rows[static_cast<size_t>(r) * dim + c] = static_cast<Fq>(d);
                        break;
                    }
                    digit[pos] = 0;
                    s.rows[static_cast<size_t>(r) * dim + c] = 0;
                    ++pos;
                }
                if (pos == cells.size()) break;
            }
            // Next pivot combination.
            int i = k - 1;
            while (i >= 0 && piv[i] == dim - k + i) --i;
            if (i < 0) break;
            ++piv[i];
            for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
}

namespace {

// Reduce w by the echelon rows; the pivot coordinates are the coefficients.
// Returns false if the remainder is nonzero (w not in the span).
bool reduce_in_place(const FiniteField& F, std::vector<Fq>& w, const Subspace& s) {
    for (int i = 0; i < s.dim; ++i) {
        Fq c = w[s.pivots[i]];
        if (c == 0) continue;
        const Fq* row = &s.rows[static_cast<size_t>(i) * s.ambient];
        for (int j = 0; j < s.ambient; ++j) w[j] = F.sub(w[j], F.mul(c, row[j]));
    }
    return std::all_of(w.begin(), w.end(), [](Fq c) { return c == 0; });
}

std::vector<Fq> row_times_mat(const FiniteField& F, const Fq* row, const FMat& m) {
    std::vector<Fq> w(m.cols, 0);
    for (int i = 0; i < m.rows; ++i) {
        Fq c = row[i];
        if (c == 0) continue;
        for (int j = 0; j < m.cols; ++j) w[j] = F.add(w[j], F.mul(c, m.at(i, j)));
    }
    return w;
}

} // namespace

void for_each_subrep(const MatrixRep& x,
                     const std::function<void(const std::vector<Subspace>&)>& fn) {
    check(x.total_dim() <= 8, "subrepresentation enumeration guard: total dimension > 8");
    const FiniteField& F = GF(x.q);
    int nv = x.shape.vertices;
    // Arrows become checkable once both endpoints are chosen.
    std::vector<std::vector<size_t>> ready(nv);
    for (size_t a = 0; a < x.shape.arrows.size(); ++a)
        ready[std::max(x.shape.arrows[a].first, x.shape.arrows[a].second)].push_back(a);
    std::vector<Subspace> chosen(nv);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == nv) {
            fn(chosen);
            return;
        }
        for_each_subspace(x.dims[v], x.q, [&](const Subspace& s) {
            for (size_t a : ready[v]) {
                auto [src, tgt] = x.shape.arrows[a];
                const Subspace& ys = (src == v) ? s : chosen[src];
                const Subspace& yt = (tgt == v) ? s : chosen[tgt];
                for (int r = 0; r < ys.dim; ++r) {
                    std::vector<Fq> w = row_times_mat(
                        F, &ys.rows[static_cast<size_t>(r) * ys.ambient], x.mats[a]);
                    if (!reduce_in_place(F, w, yt)) return; // not stable
                }
            }
            chosen[v] = s;
            self(self, v + 1);
        });
    };
    rec(rec, 0);
}

MatrixRep induced_sub(const MatrixRep& x, const std::vector<Subspace>& y) {
    const FiniteField& F = GF(x.q);
    MatrixRep rep;
    rep.shape = x.shape;
    rep.q = x.q;
    for (const auto& s : y) rep.dims.push_back(s.dim);
    for (size_t a = 0; a < x.mats.size(); ++a) {
        auto [s, t] = x.shape.arrows[a];
        FMat m(y[s].dim, y[t].dim);
        for (int r = 0; r < y[s].dim; ++r) {
            std::vector<Fq> w =
                row_times_mat(F, &y[s].rows[static_cast<size_t>(r) * y[s].ambient], x.mats[a]);
            // Coefficients sit at the pivot coordinates (rows are reduced).
            for (int j = 0; j < y[t].dim; ++j) m.at(r, j) = w[y[t].pivots[j]];
        }
        rep.mats.push_back(std::move(m));
    }
    return rep;
}

MatrixRep induced_quot(const MatrixRep& x, const std::vector<Subspace>& y) {
    const FiniteField& F = GF(x.q);
    MatrixRep rep;
    rep.shape = x.shape;
    rep.q = x.q;
    std::vector<std::vector<int>> free_cols(y.size());
    for (size_t v = 0; v < y.size(); ++v) {
        std::vector<bool> is_piv(x.dims[v], false);
        for (int p : y[v].pivots) is_piv[p] = true;
        for (int c = 0; c < x.dims[v]; ++c)
            if (!is_piv[c]) free_cols[v].push_back(c);
        rep.dims.push_back(static_cast<int>(free_cols[v].size()));
    }
    for (size_t a = 0; a < x.mats.size(); ++a) {
        auto [s, t] = x.shape.arrows[a];
        FMat m(rep.dims[s], rep.dims[t]);
        for (int r = 0; r < rep.dims[s]; ++r) {
            std::vector<Fq> w(x.dims[t], 0);
            const FMat& xa = x.mats[a];
            int row = free_cols[s][r];
            for (int j = 0; j < x.dims[t]; ++j) w[j] = xa.at(row, j);
            // Reduce modulo the subspace; remainder lives on the free columns.
            for (int i = 0; i < y[t].dim; ++i) {
                Fq c = w[y[t].pivots[i]];
                if (c == 0) continue;
                const Fq* rr = &y[t].rows[static_cast<size_t>(i) * y[t].ambient];
                for (int j = 0; j < x.dims[t]; ++j) w[j] = F.sub(w[j], F.mul(c, rr[j]));
            }
            for (int j = 0; j < rep.dims[t]; ++j) m.at(r, j) = w[free_cols[t][j]];
        }
        rep.mats.push_back(std::move(m));
    }
    return rep;
}

std::vector<SubrepResult> enumerate_subreps(const MatrixRep& x) {
    std::vector<SubrepResult> out;
    for_each_subrep(x, [&](const std::vector<Subspace>& y) {
        out.push_back({y, induced_sub(x, y), induced_quot(x, y)});
    });
    return out;
}

const CyclicCensus& subrep_census(const NilpotentModule& x, int q) {
    // Vertex count leads the key so modules over different quivers never
    // get compared against each other.
    static std::map<std::tuple<int, NilpotentModule, int>, CyclicCensus> cache;
    auto key = std::make_tuple(x.vertices(), x, q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    MatrixRep rep = realize(x, q);
    CyclicCensus census;
    for_each_subrep(rep, [&](const std::vector<Subspace>& y) {
        NilpotentModule sub = classify_cyclic(induced_sub(rep, y));
        NilpotentModule quot = classify_cyclic(induced_quot(rep, y));
        census[{quot, sub}] += 1;
    });
    return cache.emplace(key, std::move(census)).first->second;
}

const KroneckerCensus& subrep_census(const KroneckerClass& x, int q) {
    static std::map<std::pair<KroneckerClass, int>, KroneckerCensus> cache;
    auto key = std::make_pair(x, q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    MatrixRep rep = realize(x, q);
    KroneckerCensus census;
    for_each_subrep(rep, [&](const std::vector<Subspace>& y) {
        KroneckerClass sub = classify_kronecker(induced_sub(rep, y));
        KroneckerClass quot = classify_kronecker(induced_quot(rep, y));
        census[{quot, sub}] += 1;
    });
    return cache.emplace(key, std::move(census)).first->second;
}

Int hall_number(const NilpotentModule& m, const NilpotentModule& n, const NilpotentModule& x,
                int q) {
    check(add(m.dim(), n.dim()) == x.dim(), "Hall number dimension mismatch");
    const auto& census = subrep_census(x, q);
    auto it = census.find({m, n});
    return it == census.end() ? Int(0) : it->second;
}

Int hall_number(const KroneckerClass& m, const KroneckerClass& n, const KroneckerClass& x,
                int q) {
    check(add(m.dim(), n.dim()) == x.dim(), "Hall number dimension mismatch");
    const auto& census = subrep_census(x, q);
    auto it = census.find({m, n});
    return it == census.end() ? Int(0) : it->second;
}

namespace {

// Candidate fingerprint tables for Kronecker classification, per (dim, q).
struct KronTable {
    std::vector<MatrixRep> candidate_reps;
    std::map<std::vector<int>, KroneckerClass> by_fingerprint;
};

const KronTable& kron_table(const DimVec& d, int q) {
    static std::map<std::pair<DimVec, int>, KronTable> cache;
    auto key = std::make_pair(d, q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    KronTable table;
    std::vector<KroneckerIndec> candidates;
    for (int n = 0; n <= d[0]; ++n) candidates.push_back({KroneckerIndec::preproj, n, {}});
    for (int n = 0; n <= d[1]; ++n) candidates.push_back({KroneckerIndec::preinj, n, {}});
    int reg = std::min(d[0], d[1]);
    for (int m = 1; m <= reg; ++m)
        for (auto& ind : kronecker_indecs_of_dim({m, m}, q))
            candidates.push_back(ind);
    for (const auto& c : candidates) table.candidate_reps.push_back(realize_indec(c, q));
    for (const auto& cls : kronecker_classes_of_dim(d, q)) {
        std::vector<int> fp;
        for (const auto& c : candidates) fp.push_back(dim_hom(KroneckerClass::of(c), cls));
        bool fresh = table.by_fingerprint.emplace(std::move(fp), cls).second;
        check(fresh, "Hom fingerprints do not separate classes of dimension " + dimvec_str(d));
    }
    return cache.emplace(key, std::move(table)).first->second;
}

} // namespace

KroneckerClass classify_kronecker(const MatrixRep& x) {
    check(x.shape == QuiverShape::kronecker(), "classify_kronecker needs the Kronecker shape");
    const KronTable& table = kron_table(x.dims, x.q);
    std::vector<int> fp;
    for (const auto& c : table.candidate_reps) fp.push_back(hom_dim_rep(c, x));
    auto it = table.by_fingerprint.find(fp);
    check(it != table.by_fingerprint.end(), "unrecognized Kronecker representation");
    return it->second;
}

std::map<NilpotentModule, Int> ext_middles(const NilpotentModule& a, const NilpotentModule& b,
                                           int q) {
    check(a.vertices() == b.vertices(), "extension across different quivers");
    const FiniteField& F = GF(q);
    int n = a.vertices();
    MatrixRep ra = realize(a, q), rb = realize(b, q);
    // Cocycles: one block per arrow v -> v+1 of shape a.dims[v] x b.dims[v+1].
    DimVec da = ra.dims, db = rb.dims;
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + da[v] * db[(v + 1) % n];
    int zdim = offset[n];
    // Coboundaries d(f)_a = M_a(arrow) f_{t} - f_{s} M_b(arrow) for unit f.
    std::vector<std::vector<Fq>> gens;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < da[v]; ++i)
            for (int j = 0; j < db[v]; ++j) {
                std::vector<Fq> g(zdim, 0);
                int in = (v - 1 + n) % n; // arrow in -> v contributes M_a(in) E_ij
                for (int r = 0; r < da[in]; ++r)
                    g[offset[in] + r * db[v] + j] = ra.mats[in].at(r, i);
                int out = v; // arrow v -> v+1 contributes -E_ij M_b(out)
                for (int c = 0; c < db[(v + 1) % n]; ++c)
                    g[offset[out] + i * db[(v + 1) % n] + c] = F.sub(
                        g[offset[out] + i * db[(v + 1) % n] + c], rb.mats[out].at(j, c));
                gens.push_back(std::move(g));
            }
    // Row reduce the coboundary image; representatives vanish on the pivots.
    int rank = 0;
    std::vector<int> pivots;
    for (int c = 0; c < zdim && rank < static_cast<int>(gens.size()); ++c) {
        int sel = -1;
        for (int r = rank; r < static_cast<int>(gens.size()); ++r)
            if (gens[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(gens[sel], gens[rank]);
        Fq inv = F.inv(gens[rank][c]);
        for (int j = 0; j < zdim; ++j) gens[rank][j] = F.mul(gens[rank][j], inv);
        for (int r = 0; r < static_cast<int>(gens.size()); ++r) {
            if (r == rank || gens[r][c] == 0) continue;
            Fq f = gens[r][c];
            for (int j = 0; j < zdim; ++j) gens[r][j] = F.sub(gens[r][j], F.mul(f, gens[rank][j]));
        }
        pivots.push_back(c);
        ++rank;
    }
    std::vector<int> free_coords;
    {
        std::vector<bool> is_piv(zdim, false);
        for (int p : pivots) is_piv[p] = true;
        for (int c = 0; c < zdim; ++c)
            if (!is_piv[c]) free_coords.push_back(c);
    }
    check(static_cast<int>(free_coords.size()) == dim_ext(a, b),
          "extension space dimension mismatch");
    // Middle template: block lower-triangular with B first.
    MatrixRep mid;
    mid.shape = ra.shape;
    mid.q = q;
    mid.dims = add(db, da);
    for (int v = 0; v < n; ++v) {
        int w = (v + 1) % n;
        FMat m(mid.dims[v], mid.dims[w]);
        for (int i = 0; i < db[v]; ++i)
            for (int j = 0; j < db[w]; ++j) m.at(i, j) = rb.mats[v].at(i, j);
        for (int i = 0; i < da[v]; ++i)
            for (int j = 0; j < da[w]; ++j) m.at(db[v] + i, db[w] + j) = ra.mats[v].at(i, j);
        mid.mats.push_back(std::move(m));
    }
    auto cocycle_cell = [&](int coord) {
        // coord = offset[v] + i * db[v+1] + j  ->  block cell of arrow v.
        int v = 0;
        while (offset[v + 1] <= coord) ++v;
        int rem = coord - offset[v];
        int w = (v + 1) % n;
        return std::tuple<int, int, int>(v, db[v] + rem / db[w], rem % db[w]);
    };
    std::map<NilpotentModule, Int> eps;
    size_t e = free_coords.size();
    std::vector<int> digit(e, 0);
    while (true) {
        eps[classify_cyclic(mid)] += 1;
        size_t pos = 0;
        while (pos < e) {
            auto [v, r, c] = cocycle_cell(free_coords[pos]);
            int d = ++digit[pos];
            if (d < q) {
                mid.mats[v].at(r, c) = static_cast<Fq>(d);
                break;
            }
            digit[pos] = 0;
            mid.mats[v].at(r, c) = 0;
            ++pos;
        }
        if (pos == e) break;
    }
    return eps;
}

std::map<NilpotentModule, Int> hall_product_ext(const NilpotentModule& a,
                                                const NilpotentModule& b, int q) {
    // Riedtmann: F_{AB}^X = eps |Aut X| / (|Aut A||Aut B| |Hom(A,B)|).
    Int aut_a = aut_order(a).eval_int(q);
    Int aut_b = aut_order(b).eval_int(q);
    Int hom = int_pow(Int(q), dim_hom(a, b));
    Int denom = aut_a * aut_b * hom;
    std::map<NilpotentModule, Int> out;
    for (auto& [x, eps] : ext_middles(a, b, q)) {
        Int num = eps * aut_order(x).eval_int(q);
        check(num % denom == 0, "Riedtmann inversion is not integral");
        Int f = num / denom;
        if (f != 0) out[x] = f;
    }
    return out;
}

namespace {

template <typename Class>
std::pair<Int, bool> riedtmann_check_impl(const Class& m, const Class& n, const Class& x,
                                          int q) {
    Int f = hall_number(m, n, x, q);
    Int num = f * aut_order(m).eval_int(q) * aut_order(n).eval_int(q) *
              int_pow(Int(q), dim_hom(m, n));
    Int aut_x = aut_order(x).eval_int(q);
    if (num % aut_x != 0) return {Int(0), false};
    Int eps = num / aut_x;
    return {eps, eps >= 0};
}

} // namespace

std::pair<Int, bool> riedtmann_check(const NilpotentModule& m, const NilpotentModule& n,
                                     const NilpotentModule& x, int q) {
    return riedtmann_check_impl(m, n, x, q);
}

std::pair<Int, bool> riedtmann_check(const KroneckerClass& m, const KroneckerClass& n,
                                     const KroneckerClass& x, int q) {
    return riedtmann_check_impl(m, n, x, q);
}

bool riedtmann_sum_check(const NilpotentModule& m, const NilpotentModule& n, int q) {
    Int sum = 0;
    for (const auto& x : modules_of_dim(m.vertices(), add(m.dim(), n.dim()))) {
        auto [eps, ok] = riedtmann_check(m, n, x, q);
        if (!ok) return false;
        sum += eps;
    }
    return sum == int_pow(Int(q), dim_ext(m, n));
}

bool riedtmann_sum_check(const KroneckerClass& m, const KroneckerClass& n, int q) {
    Int sum = 0;
    for (const auto& x : kronecker_classes_of_dim(add(m.dim(), n.dim()), q)) {
        auto [eps, ok] = riedtmann_check(m, n, x, q);
        if (!ok) return false;
        sum += eps;
    }
    return sum == int_pow(Int(q), dim_ext(m, n));
}

QRat hall_polynomial(const NilpotentModule& m, const NilpotentModule& n,
                     const NilpotentModule& x) {
    // Monos N -> X with cokernel M number F |Aut N| <= q^{dim Hom(N,X)}, and
    // dually for epis onto M, so both differences bound the degree.
    int bound = std::min(dim_hom(n, x) - dim_end(n), dim_hom(x, m) - dim_end(m));
    bound = std::max(bound, 0);
    auto orders = FiniteField::supported_orders();
    auto attempt = [&](int b) {
        check(b + 2 <= static_cast<int>(orders.size()),
              "Hall polynomial interpolation infeasible: degree bound " + std::to_string(b));
        std::vector<std::pair<Int, Int>> samples;
        for (int i = 0; i < b + 2; ++i)
            samples.emplace_back(orders[i], hall_number(m, n, x, orders[i]));
        return interpolate_polynomial(samples, b);
    };
    try {
        return attempt(bound);
    } catch (const InterpolationError&) {
        return attempt(bound + 1); // escalate once, then give up
    }
}

MatrixRep reflect(char direction, int i, const MatrixRep& x) {
    check(!x.shape.nilpotent, "reflection functors need an acyclic quiver");
    const FiniteField& F = GF(x.q);
    MatrixRep out;
    out.q = x.q;
    out.shape = x.shape;
    std::vector<size_t> touched;
    for (size_t a = 0; a < x.shape.arrows.size(); ++a) {
        auto [s, t] = x.shape.arrows[a];
        if (direction == '+') {
            check(s != i, "vertex is not a sink");
            if (t == i) touched.push_back(a);
        } else {
            check(direction == '-', "direction must be '+' or '-'");
            check(t != i, "vertex is not a source");
            if (s == i) touched.push_back(a);
        }
    }
    for (size_t a : touched)
        std::swap(out.shape.arrows[a].first, out.shape.arrows[a].second);
    out.dims = x.dims;
    out.mats = x.mats;

    if (direction == '+') {
        // X'_i = ker( (+)_a X_{s(a)} -> X_i ), new arrows are the projections.
        int stacked = 0;
        std::vector<int> slot(touched.size());
        for (size_t k = 0; k < touched.size(); ++k) {
            slot[k] = stacked;
            stacked += x.dims[x.shape.arrows[touched[k]].first];
        }
        FMat phi(stacked, x.dims[i]);
        for (size_t k = 0; k < touched.size(); ++k) {
            const FMat& m = x.mats[touched[k]];
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < m.cols; ++c) phi.at(slot[k] + r, c) = m.at(r, c);
        }
        // Left kernel of phi = right kernel of phi transposed.
        FMat phit(phi.cols, phi.rows);
        for (int r = 0; r < phi.rows; ++r)
            for (int c = 0; c < phi.cols; ++c) phit.at(c, r) = phi.at(r, c);
        // Row reduce phit, then free columns give the kernel basis.
        std::vector<std::vector<Fq>> rows;
        for (int r = 0; r < phit.rows; ++r)
            rows.emplace_back(phit.a.begin() + static_cast<size_t>(r) * phit.cols,
                              phit.a.begin() + static_cast<size_t>(r + 1) * phit.cols);
        int rank = 0;
        std::vector<int> piv;
        for (int c = 0; c < phit.cols && rank < static_cast<int>(rows.size()); ++c) {
            int sel = -1;
            for (int r = rank; r < static_cast<int>(rows.size()); ++r)
                if (rows[r][c] != 0) {
                    sel = r;
                    break;
                }
            if (sel < 0) continue;
            std::swap(rows[sel], rows[rank]);
            Fq inv = F.inv(rows[rank][c]);
            for (int j = 0; j < phit.cols; ++j) rows[rank][j] = F.mul(rows[rank][j], inv);
            for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
                if (r == rank || rows[r][c] == 0) continue;
                Fq f = rows[r][c];
                for (int j = 0; j < phit.cols; ++j)
                    rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[rank][j]));
            }
            piv.push_back(c);
            ++rank;
        }
        std::vector<bool> is_piv(phit.cols, false);
        for (int p : piv) is_piv[p] = true;
        std::vector<std::vector<Fq>> kernel;
        for (int c = 0; c < phit.cols; ++c) {
            if (is_piv[c]) continue;
            std::vector<Fq> v(phit.cols, 0);
            v[c] = 1;
            for (int r = 0; r < rank; ++r)
                if (rows[r][c] != 0) v[piv[r]] = F.neg(rows[r][c]);
            kernel.push_back(std::move(v));
        }
        int newdim = static_cast<int>(kernel.size());
        out.dims[i] = newdim;
        for (size_t k = 0; k < touched.size(); ++k) {
            int ds = x.dims[x.shape.arrows[touched[k]].first];
            FMat m(newdim, ds);
            for (int r = 0; r < newdim; ++r)
                for (int c = 0; c < ds; ++c) m.at(r, c) = kernel[r][slot[k] + c];
            out.mats[touched[k]] = std::move(m);
        }
    } else {
        // X'_i = coker( X_i -> (+)_a X_{t(a)} ), new arrows embed-and-project.
        int stacked = 0;
        std::vector<int> slot(touched.size());
        for (size_t k = 0; k < touched.size(); ++k) {
            slot[k] = stacked;
            stacked += x.dims[x.shape.arrows[touched[k]].second];
        }
        std::vector<std::vector<Fq>> rows;
        for (int r = 0; r < x.dims[i]; ++r) {
            std::vector<Fq> row(stacked, 0);
            for (size_t k = 0; k < touched.size(); ++k) {
                const FMat& m = x.mats[touched[k]];
                for (int c = 0; c < m.cols; ++c) row[slot[k] + c] = m.at(r, c);
            }
            rows.push_back(std::move(row));
        }
        int rank = 0;
        std::vector<int> piv;
        for (int c = 0; c < stacked && rank < static_cast<int>(rows.size()); ++c) {
            int sel = -1;
            for (int r = rank; r < static_cast<int>(rows.size()); ++r)
                if (rows[r][c] != 0) {
                    sel = r;
                    break;
                }
            if (sel < 0) continue;
            std::swap(rows[sel], rows[rank]);
            Fq inv = F.inv(rows[rank][c]);
            for (int j = 0; j < stacked; ++j) rows[rank][j] = F.mul(rows[rank][j], inv);
            for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
                if (r == rank || rows[r][c] == 0) continue;
                Fq f = rows[r][c];
                for (int j = 0; j < stacked; ++j)
                    rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[rank][j]));
            }
            piv.push_back(c);
            ++rank;
        }
        std::vector<bool> is_piv(stacked, false);
        for (int p : piv) is_piv[p] = true;
        std::vector<int> free_cols;
        for (int c = 0; c < stacked; ++c)
            if (!is_piv[c]) free_cols.push_back(c);
        int newdim = static_cast<int>(free_cols.size());
        out.dims[i] = newdim;
        for (size_t k = 0; k < touched.size(); ++k) {
            int dt = x.dims[x.shape.arrows[touched[k]].second];
            FMat m(dt, newdim);
            for (int j = 0; j < dt; ++j) {
                std::vector<Fq> w(stacked, 0);
                w[slot[k] + j] = 1;
                for (int r = 0; r < rank; ++r) {
                    Fq c = w[piv[r]];
                    if (c == 0) continue;
                    for (int cc = 0; cc < stacked; ++cc)
                        w[cc] = F.sub(w[cc], F.mul(c, rows[r][cc]));
                }
                for (int cc = 0; cc < newdim; ++cc) m.at(j, cc) = w[free_cols[cc]];
            }
            out.mats[touched[k]] = std::move(m);
        }
    }
    return out;
}

} // namespace hallwright
