#include "hallwright/hallalg.hpp"

#include "hallwright/linalg.hpp"
#include "hallwright/numeric.hpp"

#include <algorithm>
#include <sstream>

namespace hallwright {

namespace {

// Loop-quiver modules are exactly partitions of segment lengths.
NilpotentModule loop_module(const Partition& p) {
    std::vector<Segment> segs;
    for (int part : p.parts()) segs.push_back({0, part});
    return NilpotentModule(1, std::move(segs));
}

} // namespace

std::string iso_str(const IsoClass& m) {
    return std::visit([](const auto& v) { return v.str(); }, m);
}

DimVec iso_dim(const IsoClass& m) {
    return std::visit([](const auto& v) { return v.dim(); }, m);
}

int iso_total_dim(const IsoClass& m) {
    return std::visit([](const auto& v) { return v.total_dim(); }, m);
}

Poly iso_aut(const IsoClass& m) {
    return std::visit([](const auto& v) { return aut_order(v); }, m);
}

int iso_end_dim(const IsoClass& m) {
    return std::visit([](const auto& v) { return dim_end(v); }, m);
}

QRat HallElement::coeff(const IsoClass& m) const {
    auto it = c_.find(m);
    return it == c_.end() ? QRat(0) : it->second;
}

std::optional<DimVec> HallElement::degree() const {
    if (c_.empty()) return std::nullopt;
    DimVec d = iso_dim(c_.begin()->first);
    for (const auto& [m, c] : c_) {
        (void)c;
        if (iso_dim(m) != d) return std::nullopt;
    }
    return d;
}

void HallElement::add(const IsoClass& m, const QRat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = c_.emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
}

HallElement HallElement::scaled(const QRat& c) const {
    HallElement out;
    if (c.is_zero()) return out;
    for (const auto& [m, v] : c_) out.c_.emplace(m, v * c);
    return out;
}

HallElement& HallElement::operator+=(const HallElement& o) {
    for (const auto& [m, c] : o.c_) add(m, c);
    return *this;
}

HallElement& HallElement::operator-=(const HallElement& o) {
    for (const auto& [m, c] : o.c_) add(m, -c);
    return *this;
}

std::string HallElement::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : c_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*[" << iso_str(m) << "]";
    }
    return os.str();
}

QRat TensorElement::coeff(const IsoClass& m, const IsoClass& n) const {
    auto it = c_.find({m, n});
    return it == c_.end() ? QRat(0) : it->second;
}

void TensorElement::add(const IsoClass& m, const IsoClass& n, const QRat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = c_.emplace(std::make_pair(m, n), c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.c_) add(k.first, k.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [k, c] : o.c_) add(k.first, k.second, -c);
    return *this;
}

std::string TensorElement::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : c_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*[" << iso_str(k.first) << "](x)["
           << iso_str(k.second) << "]";
    }
    return os.str();
}

HallAlgebra::HallAlgebra(HallContext ctx) : ctx_(ctx) {
    check(ctx_.d >= 1, "H_d parameter must be positive");
    if (ctx_.kind == HallContext::Kind::cyclic) {
        check(ctx_.l >= 0, "cyclic quiver needs l >= 0");
        check(ctx_.d == 1 || (ctx_.l == 0 && ctx_.generic()),
              "H_d twisting is defined for the generic loop algebra only");
    } else {
        check(!ctx_.generic(), "Kronecker context requires a specialized field");
        check(ctx_.d == 1, "H_d twisting is a loop-quiver notion");
    }
    if (!ctx_.generic()) GF(ctx_.q0); // validates the field order eagerly
}

IsoClass HallAlgebra::zero_class() const {
    if (ctx_.kind == HallContext::Kind::cyclic)
        return NilpotentModule::zero(ctx_.vertices());
    return KroneckerClass::zero();
}

IsoClass HallAlgebra::simple_class(int vertex) const {
    check(vertex >= 0 && vertex < ctx_.vertices(), "vertex out of range");
    if (ctx_.kind == HallContext::Kind::cyclic)
        return NilpotentModule::simple(ctx_.vertices(), vertex);
    return vertex == 0 ? KroneckerClass::simple_injective()
                       : KroneckerClass::simple_projective();
}

HallElement HallAlgebra::basis(const IsoClass& m, const QRat& c) const {
    HallElement out;
    out.add(m, c);
    return out;
}

HallElement HallAlgebra::parse(const std::string& text) const {
    if (ctx_.kind == HallContext::Kind::cyclic)
        return basis(NilpotentModule::parse(ctx_.vertices(), text));
    return basis(KroneckerClass::parse(text, ctx_.q0));
}

std::vector<IsoClass> HallAlgebra::classes_of_dim(const DimVec& d) const {
    std::vector<IsoClass> out;
    if (ctx_.kind == HallContext::Kind::cyclic) {
        for (auto& m : modules_of_dim(ctx_.vertices(), d)) out.emplace_back(std::move(m));
    } else {
        for (auto& m : kronecker_classes_of_dim(d, ctx_.q0)) out.emplace_back(std::move(m));
    }
    return out;
}

QRat HallAlgebra::lift(const Poly& p) const {
    if (ctx_.generic())
        return ctx_.d == 1 ? QRat(p) : QRat(p.subst_power(ctx_.d));
    return QRat(Rat(p.eval_int(Int(ctx_.q0))));
}

const HallElement& HallAlgebra::basis_product(const IsoClass& a, const IsoClass& b) const {
    auto key = std::make_pair(a, b);
    auto it = row_cache_.find(key);
    if (it == row_cache_.end()) it = row_cache_.emplace(key, product_row(a, b)).first;
    return it->second;
}

HallElement HallAlgebra::product_row(const IsoClass& a, const IsoClass& b) const {
    if (iso_total_dim(a) == 0) return basis(b);
    if (iso_total_dim(b) == 0) return basis(a);
    HallElement out;
    DimVec target = add(iso_dim(a), iso_dim(b));
    if (ctx_.kind == HallContext::Kind::cyclic) {
        const auto& ma = std::get<NilpotentModule>(a);
        const auto& mb = std::get<NilpotentModule>(b);
        if (ctx_.generic() && ctx_.l == 0) {
            for (const auto& [nu, f] : hall_product_generic(ma.loewy(), mb.loewy()))
                out.add(loop_module(nu), ctx_.d == 1 ? f : f.subst_power(ctx_.d));
        } else if (ctx_.generic()) {
            for (const auto& x : modules_of_dim(ctx_.vertices(), target))
                out.add(x, hall_polynomial(ma, mb, x));
        } else {
            for (const auto& [x, f] : hall_product_ext(ma, mb, ctx_.q0))
                out.add(x, QRat(Rat(f)));
        }
    } else {
        const auto& ma = std::get<KroneckerClass>(a);
        const auto& mb = std::get<KroneckerClass>(b);
        for (const auto& x : kronecker_classes_of_dim(target, ctx_.q0))
            out.add(x, QRat(Rat(hall_number(ma, mb, x, ctx_.q0))));
    }
    for (const auto& [x, c] : out.terms()) {
        (void)c;
        check(iso_dim(x) == target, "product term off the graded degree");
    }
    return out;
}

HallElement HallAlgebra::mul(const HallElement& x, const HallElement& y) const {
    HallElement out;
    for (const auto& [ma, ca] : x.terms())
        for (const auto& [mb, cb] : y.terms())
            out += basis_product(ma, mb).scaled(ca * cb);
    return out;
}

TensorElement HallAlgebra::comultiply_basis(const IsoClass& x) const {
    TensorElement out;
    if (!ctx_.generic()) {
        // Census route: Delta([X]) = sum over submodules, grouped by class.
        Int ax = iso_aut(x).eval_int(Int(ctx_.q0));
        auto emit = [&](const IsoClass& m, const IsoClass& n, const Int& count) {
            Int am = iso_aut(m).eval_int(Int(ctx_.q0));
            Int an = iso_aut(n).eval_int(Int(ctx_.q0));
            out.add(m, n, QRat(Rat(count * am * an, ax)));
        };
        if (ctx_.kind == HallContext::Kind::cyclic) {
            for (const auto& [mn, c] : subrep_census(std::get<NilpotentModule>(x), ctx_.q0))
                emit(mn.first, mn.second, c);
        } else {
            for (const auto& [mn, c] : subrep_census(std::get<KroneckerClass>(x), ctx_.q0))
                emit(mn.first, mn.second, c);
        }
        return out;
    }
    // Generic route: F_{MN}^X aut(M) aut(N) / aut(X) with polynomial F.
    check(ctx_.kind == HallContext::Kind::cyclic, "generic comultiplication is cyclic-only");
    const auto& mx = std::get<NilpotentModule>(x);
    QRat ax(iso_aut(x));
    DimVec dx = mx.dim();
    std::vector<DimVec> splits{{DimVec(dx.size(), 0)}};
    for (size_t i = 0; i < dx.size(); ++i) {
        std::vector<DimVec> next;
        for (const auto& s : splits)
            for (int v = 0; v <= dx[i]; ++v) {
                DimVec t = s;
                t[i] = v;
                next.push_back(std::move(t));
            }
        splits = std::move(next);
    }
    for (const auto& dm : splits) {
        DimVec dn = sub(dx, dm);
        for (const auto& m : modules_of_dim(ctx_.vertices(), dm))
            for (const auto& n : modules_of_dim(ctx_.vertices(), dn)) {
                QRat f = ctx_.l == 0 ? hall_poly(m.loewy(), n.loewy(), mx.loewy())
                                     : hall_polynomial(m, n, mx);
                if (f.is_zero()) continue;
                QRat c = f * QRat(aut_order(m) * aut_order(n)) / ax;
                out.add(m, n, ctx_.d == 1 ? c : c.subst_power(ctx_.d));
            }
    }
    return out;
}

TensorElement HallAlgebra::comultiply(const HallElement& x) const {
    TensorElement out;
    for (const auto& [m, c] : x.terms()) {
        check(iso_total_dim(m) <= 8, "comultiplication guard: total dimension > 8");
        TensorElement basis_part = comultiply_basis(m);
        for (const auto& [k, v] : basis_part.terms())
            out.add(k.first, k.second, v * c);
    }
    return out;
}

QRat HallAlgebra::form(const HallElement& x, const HallElement& y) const {
    QRat out(0);
    for (const auto& [m, cx] : x.terms()) {
        QRat cy = y.coeff(m);
        if (cy.is_zero()) continue;
        out += cx * cy / lift(iso_aut(m));
    }
    return out;
}

QRat HallAlgebra::form_tensor(const TensorElement& t, const HallElement& y,
                              const HallElement& z) const {
    QRat out(0);
    for (const auto& [k, c] : t.terms()) {
        QRat cy = y.coeff(k.first), cz = z.coeff(k.second);
        if (cy.is_zero() || cz.is_zero()) continue;
        out += c * cy * cz / (lift(iso_aut(k.first)) * lift(iso_aut(k.second)));
    }
    return out;
}

HallElement HallAlgebra::e_prime(int vertex, const HallElement& x) const {
    IsoClass si = simple_class(vertex);
    QRat inv_aut = QRat(1) / lift(iso_aut(si));
    HallElement out;
    TensorElement dx = comultiply(x);
    for (const auto& [k, c] : dx.terms())
        if (k.first == si) out.add(k.second, c * inv_aut);
    return out;
}

HallElement HallAlgebra::z_generator(int m) const {
    check(ctx_.kind == HallContext::Kind::cyclic, "z_m lives in cyclic contexts");
    check(m >= 1, "z_m needs m >= 1");
    HallElement out;
    for (const auto& mod : z_support(m, ctx_.l)) {
        QRat c = lift(aut_order(mod));
        if (dim_end(mod) % 2 != 0) c = -c;
        out.add(mod, c);
    }
    return out;
}

std::vector<DimVec> HallAlgebra::dim_vectors_upto(int bound) const {
    std::vector<DimVec> out;
    DimVec cur(ctx_.vertices(), 0);
    auto rec = [&](auto&& self, int vertex, int used) -> void {
        if (vertex == ctx_.vertices()) {
            if (used > 0) out.push_back(cur);
            return;
        }
        for (int v = 0; used + v <= bound; ++v) {
            cur[vertex] = v;
            self(self, vertex + 1, used + v);
        }
        cur[vertex] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

CentralityReport HallAlgebra::verify_central(const HallElement& z, int dim_bound) const {
    CentralityReport report;
    for (const auto& dv : dim_vectors_upto(dim_bound)) {
        for (const auto& m : classes_of_dim(dv)) {
            HallElement bm = basis(m);
            HallElement comm = mul(z, bm) - mul(bm, z);
            ++report.checked;
            if (!comm.is_zero()) {
                report.pass = false;
                report.witness = iso_str(m);
                report.commutator = std::move(comm);
                return report;
            }
        }
    }
    return report;
}

int HallAlgebra::centre_dimension(const DimVec& degree, int dim_bound) const {
    check(!ctx_.generic(), "centre_dimension runs in specialized mode");
    std::vector<IsoClass> unknowns = classes_of_dim(degree);
    if (unknowns.empty()) return 0;
    Matrix<Rat> rows;
    for (const auto& dv : dim_vectors_upto(dim_bound)) {
        for (const auto& m : classes_of_dim(dv)) {
            std::map<IsoClass, std::vector<Rat>> by_target;
            for (size_t k = 0; k < unknowns.size(); ++k) {
                HallElement diff = basis_product(unknowns[k], m);
                diff -= basis_product(m, unknowns[k]);
                for (const auto& [x, c] : diff.terms()) {
                    auto [it, fresh] =
                        by_target.emplace(x, std::vector<Rat>(unknowns.size(), Rat(0)));
                    (void)fresh;
                    it->second[k] = c.as_rational();
                }
            }
            for (auto& [x, row] : by_target) {
                (void)x;
                rows.push_back(std::move(row));
            }
        }
    }
    if (rows.empty()) return static_cast<int>(unknowns.size());
    return static_cast<int>(unknowns.size()) - rank(std::move(rows));
}

QRat HallAlgebra::hl_coeff(const QRat& c, long long nstat) const {
    if (ctx_.generic())
        return c.subst_inverse_power(ctx_.d) *
               QRat::var_pow(static_cast<int>(nstat) * ctx_.d);
    Int qd = int_pow(Int(ctx_.q0), static_cast<unsigned>(ctx_.d));
    Rat v = c.eval(Rat(Int(1), qd));
    return QRat(v * Rat(int_pow(qd, static_cast<unsigned>(nstat))));
}

HallElement HallAlgebra::psi_d(const SymFunc& f) const {
    check(ctx_.kind == HallContext::Kind::cyclic && ctx_.l == 0,
          "psi_d maps into the loop-quiver algebra");
    HallElement out;
    for (const auto& [la, c] : f.in_hl_basis())
        out.add(loop_module(la), hl_coeff(c, static_cast<long long>(la.n_stat())));
    return out;
}

HallElement HallAlgebra::psi_S(const SymFunc& f, int vertex) const {
    check(ctx_.kind == HallContext::Kind::cyclic, "psi_S maps into a cyclic-quiver algebra");
    check(ctx_.d == 1, "psi_S is untwisted");
    check(vertex >= 0 && vertex < ctx_.vertices(), "vertex out of range");
    HallElement out;
    for (const auto& [la, c] : f.in_hl_basis()) {
        std::vector<Segment> segs;
        for (int part : la.parts()) segs.push_back({vertex, part * ctx_.vertices()});
        out.add(NilpotentModule(ctx_.vertices(), std::move(segs)),
                hl_coeff(c, static_cast<long long>(la.n_stat())));
    }
    return out;
}

std::vector<std::vector<Rat>> HallAlgebra::word_matrix(const DimVec& degree,
                                                       std::vector<IsoClass>& basis_out) const {
    check(!ctx_.generic(), "composition-subalgebra ranks run in specialized mode");
    basis_out = classes_of_dim(degree);
    std::map<IsoClass, size_t> col;
    for (size_t i = 0; i < basis_out.size(); ++i) col.emplace(basis_out[i], i);
    std::vector<int> word;
    for (int v = 0; v < ctx_.vertices(); ++v) {
        check(degree[v] >= 0, "degree must be componentwise nonnegative");
        word.insert(word.end(), static_cast<size_t>(degree[v]), v);
    }
    std::vector<std::vector<Rat>> rows;
    do {
        HallElement image = unit();
        for (int v : word) image = mul(image, simple(v));
        std::vector<Rat> row(basis_out.size(), Rat(0));
        for (const auto& [m, c] : image.terms()) {
            auto it = col.find(m);
            check(it != col.end(), "word image leaves the graded basis");
            row[it->second] = c.as_rational();
        }
        rows.push_back(std::move(row));
    } while (std::next_permutation(word.begin(), word.end()));
    return rows;
}

int HallAlgebra::composition_graded_dim(const DimVec& degree) const {
    std::vector<IsoClass> ignored;
    return rank(word_matrix(degree, ignored));
}

bool HallAlgebra::in_composition(const HallElement& x) const {
    if (x.is_zero()) return true;
    auto degree = x.degree();
    check(degree.has_value(), "in_composition needs a homogeneous element");
    std::vector<IsoClass> basis_classes;
    Matrix<Rat> rows = word_matrix(*degree, basis_classes);
    int span_rank = rank(rows);
    std::vector<Rat> extra(basis_classes.size(), Rat(0));
    for (const auto& [m, c] : x.terms()) {
        auto it = std::find(basis_classes.begin(), basis_classes.end(), m);
        check(it != basis_classes.end(), "element leaves the graded basis");
        extra[static_cast<size_t>(it - basis_classes.begin())] = c.as_rational();
    }
    rows.push_back(std::move(extra));
    return rank(std::move(rows)) == span_rank;
}

nlohmann::ordered_json HallAlgebra::to_json(const HallElement& x) const {
    nlohmann::ordered_json j;
    auto degree = x.degree();
    if (degree.has_value())
        j["degree"] = *degree;
    else
        j["degree"] = nullptr;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : x.terms())
        terms.push_back({{"module", iso_str(m)}, {"coeff", c.str()}});
    j["terms"] = std::move(terms);
    j["mode"] = ctx_.generic() ? "generic" : "specialized";
    if (!ctx_.generic()) j["q"] = ctx_.q0;
    if (ctx_.d != 1) j["d"] = ctx_.d;
    return j;
}

} // namespace hallwright
