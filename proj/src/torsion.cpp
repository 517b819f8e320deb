#include "lpgeom/torsion.hpp"

#include "lpgeom/error.hpp"

namespace lpg::torsion {

namespace {

const Expression kHalf(Rational(1, 2));

Expression delta(unsigned a, unsigned b) { return Expression(a == b ? 1 : 0); }

std::string label(const std::string& name, std::initializer_list<unsigned> index) {
    std::string s = name;
    for (unsigned i : index) s += "[" + std::to_string(i + 1) + "]";
    return s;
}

void require_equal(const Expression& a, const Expression& b, const std::string& la, const std::string& lb) {
    if (!(a == b))
        throw Error(ErrorKind::SymmetryViolation, la + " = " + a.to_string() + " but " + lb + " = " + b.to_string());
}

void require_negated(const Expression& a, const Expression& b, const std::string& la, const std::string& lb) {
    if (!(a == -b))
        throw Error(ErrorKind::SymmetryViolation,
                    la + " = " + a.to_string() + " must be minus " + lb + " = " + b.to_string());
}

void require_size(const DenseTensor& t, unsigned n, unsigned rank, const std::string& name) {
    if (t.n() != n || t.rank() != rank)
        throw Error(ErrorKind::InvalidArgument, name + " has the wrong shape for n = " + std::to_string(n));
}

void add_if_nonzero(std::vector<Condition>& out, std::string name, Expression v) {
    if (!v.is_zero()) out.push_back(Condition{std::move(name), std::move(v)});
}

} // namespace

DenseTensor::DenseTensor(unsigned n, unsigned rank) : n_(n), rank_(rank) {
    std::size_t size = 1;
    for (unsigned r = 0; r < rank; ++r) size *= n;
    data_.assign(size, Expression(0));
}

std::size_t DenseTensor::offset(std::initializer_list<unsigned> index) const {
    if (index.size() != rank_)
        throw Error(ErrorKind::InvalidArgument, "tensor of rank " + std::to_string(rank_) + " indexed with " +
                                                    std::to_string(index.size()) + " indices");
    std::size_t off = 0;
    for (unsigned i : index) {
        if (i >= n_) throw Error(ErrorKind::InvalidArgument, "tensor index " + std::to_string(i + 1) + " exceeds n = " +
                                                                 std::to_string(n_));
        off = off * n_ + i;
    }
    return off;
}

Expression& DenseTensor::at(std::initializer_list<unsigned> index) { return data_[offset(index)]; }
const Expression& DenseTensor::at(std::initializer_list<unsigned> index) const { return data_[offset(index)]; }

TorsionTensor::TorsionTensor(unsigned n) : n_(n), t0t_(n, 3), t0T_(n, 4), tt_(n, 4), tT_(n, 5) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "torsion needs n >= 1");
}

void TorsionTensor::set_t0t(unsigned i, unsigned j, unsigned k, const Expression& v) {
    t0t_.at({i, j, k}) = v;
    t0t_.at({j, i, k}) = v;
}

void TorsionTensor::set_t0T(unsigned i, unsigned j, unsigned k, unsigned l, const Expression& v) {
    for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        t0T_.at({a, b, k, l}) = v;
        t0T_.at({a, b, l, k}) = v;
    }
}

void TorsionTensor::set_tt(unsigned i, unsigned j, unsigned k, unsigned l, const Expression& v) {
    if (k == l && !v.is_zero())
        throw Error(ErrorKind::SymmetryViolation, label("Ttt", {i, j, k, l}) + " must vanish on the diagonal");
    for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        tt_.at({a, b, k, l}) = v;
        tt_.at({a, b, l, k}) = -v;
    }
}

void TorsionTensor::set_tT(unsigned i, unsigned j, unsigned k, unsigned l, unsigned m, const Expression& v) {
    for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        tT_.at({a, b, k, l, m}) = v;
        tT_.at({a, b, k, m, l}) = v;
    }
}

void TorsionTensor::validate() const {
    const unsigned n = n_;
    require_size(t0t_, n, 3, "T_ij^k");
    require_size(t0T_, n, 4, "T_ij,kl");
    require_size(tt_, n, 4, "T_ij^kl");
    require_size(tT_, n, 5, "T^k_ij,lm");
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) {
                require_equal(t0t(i, j, k), t0t(j, i, k), label("T0t", {i, j, k}), label("T0t", {j, i, k}));
                for (unsigned l = 0; l < n; ++l) {
                    require_equal(t0T(i, j, k, l), t0T(j, i, k, l), label("T0T", {i, j, k, l}), label("T0T", {j, i, k, l}));
                    require_equal(t0T(i, j, k, l), t0T(i, j, l, k), label("T0T", {i, j, k, l}), label("T0T", {i, j, l, k}));
                    require_equal(tt(i, j, k, l), tt(j, i, k, l), label("Ttt", {i, j, k, l}), label("Ttt", {j, i, k, l}));
                    require_negated(tt(i, j, k, l), tt(i, j, l, k), label("Ttt", {i, j, k, l}), label("Ttt", {i, j, l, k}));
                    for (unsigned m = 0; m < n; ++m) {
                        require_equal(tT(i, j, k, l, m), tT(j, i, k, l, m), label("TtT", {i, j, k, l, m}),
                                      label("TtT", {j, i, k, l, m}));
                        require_equal(tT(i, j, k, l, m), tT(i, j, k, m, l), label("TtT", {i, j, k, l, m}),
                                      label("TtT", {i, j, k, m, l}));
                    }
                }
            }
}

GaugeParameters GaugeParameters::zero(unsigned n) {
    return GaugeParameters{Expression(0), std::vector<Expression>(n, Expression(0)), DenseTensor(n, 2), DenseTensor(n, 3)};
}

GaugeParameters GaugeParameters::residual(unsigned n, const Expression& p) {
    GaugeParameters g = zero(n);
    g.p = p;
    for (unsigned i = 0; i < n; ++i) g.c2.at({i, i}) = kHalf * p;
    return g;
}

GaugeParameters GaugeParameters::operator-() const {
    GaugeParameters g = *this;
    g.p = -g.p;
    for (auto& e : g.c) e = -e;
    for (auto& e : g.c2.data()) e = -e;
    for (auto& e : g.c3.data()) e = -e;
    return g;
}

void GaugeParameters::validate() const {
    const unsigned n = static_cast<unsigned>(c.size());
    require_size(c2, n, 2, "c^i_j");
    require_size(c3, n, 3, "c^i_jk");
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = j + 1; k < n; ++k)
                require_equal(c3.at({i, j, k}), c3.at({i, k, j}), label("c3", {i, j, k}), label("c3", {i, k, j}));
}

TorsionTensor apply_gauge(const TorsionTensor& T, const GaugeParameters& g) {
    T.validate();
    g.validate();
    const unsigned n = T.n();
    if (g.c.size() != n) throw Error(ErrorKind::InvalidArgument, "gauge parameters have the wrong n");
    auto c1 = [&](unsigned i) -> const Expression& { return g.c[i]; };
    auto c2 = [&](unsigned i, unsigned j) -> const Expression& { return g.c2.at({i, j}); };
    auto c3 = [&](unsigned i, unsigned j, unsigned k) -> const Expression& { return g.c3.at({i, j, k}); };
    TorsionTensor out = T;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) {
                out.raw_t0t().at({i, j, k}) = T.t0t(i, j, k) - kHalf * (c1(i) * delta(j, k) + c1(j) * delta(i, k));
                for (unsigned l = 0; l < n; ++l) {
                    out.raw_tt().at({i, j, k, l}) = T.tt(i, j, k, l) -
                                                    kHalf * (c2(i, k) * delta(j, l) - c2(i, l) * delta(j, k)) -
                                                    kHalf * (c2(j, k) * delta(i, l) - c2(j, l) * delta(i, k));
                    out.raw_t0T().at({i, j, k, l}) =
                        T.t0T(i, j, l, k) - kHalf * (c2(i, k) * delta(j, l) + c2(i, l) * delta(j, k)) -
                        kHalf * (c2(j, k) * delta(i, l) + c2(j, l) * delta(i, k)) +
                        kHalf * g.p * (delta(i, k) * delta(j, l) + delta(i, l) * delta(j, k));
                    for (unsigned m = 0; m < n; ++m)
                        out.raw_tT().at({i, j, k, l, m}) =
                            T.tT(i, j, k, l, m) - kHalf * (c3(i, k, l) * delta(j, m) + c3(i, k, m) * delta(j, l)) -
                            kHalf * (c3(j, k, l) * delta(i, m) + c3(j, k, m) * delta(i, l));
                }
            }
    out.validate();
    return out;
}

std::vector<Condition> first_normalization_defects(const TorsionTensor& T) {
    const unsigned n = T.n();
    std::vector<Condition> out;
    for (unsigned i = 0; i < n; ++i) {
        add_if_nonzero(out, label("T_ii^i", {i}), T.t0t(i, i, i));
        for (unsigned k = 0; k < n; ++k)
            if (k != i) add_if_nonzero(out, label("T_ii^ki", {i, k}), T.tt(i, i, k, i));
        add_if_nonzero(out, label("T_ii,ii", {i}), T.t0T(i, i, i, i));
        for (unsigned k = 0; k < n; ++k) {
            if (k == i) continue;
            for (unsigned m = k; m < n; ++m)
                if (m != i)
                    add_if_nonzero(out, label("T^k_ii,im+T^m_ii,ik", {i, k, m}), T.tT(i, i, k, i, m) + T.tT(i, i, m, i, k));
        }
        for (unsigned k = 0; k < n; ++k) add_if_nonzero(out, label("T^k_ii,ii", {i, k}), T.tT(i, i, k, i, i));
    }
    return out;
}

FirstNormalization solve_first_normalization(const TorsionTensor& T) {
    T.validate();
    const unsigned n = T.n();
    GaugeParameters g = GaugeParameters::zero(n);
    for (unsigned i = 0; i < n; ++i) {
        g.c[i] = T.t0t(i, i, i);
        for (unsigned k = 0; k < n; ++k)
            g.c2.at({i, k}) = k == i ? kHalf * T.t0T(i, i, i, i) : T.tt(i, i, k, i);
        for (unsigned k = 0; k < n; ++k)
            for (unsigned m = 0; m < n; ++m) {
                Expression v;
                if (k != i && m != i) v = kHalf * (T.tT(i, i, k, i, m) + T.tT(i, i, m, i, k));
                else v = kHalf * T.tT(i, i, k == i ? m : k, i, i);
                g.c3.at({i, k, m}) = v;
            }
    }
    FirstNormalization r{g, {"p"}, apply_gauge(T, g), {}};
    r.defects = first_normalization_defects(r.normalized);
    return r;
}

ResidualCertificate residual_gauge_preserves(const TorsionTensor& T, const Expression& p) {
    if (auto d = first_normalization_defects(T); !d.empty())
        throw Error(ErrorKind::Precondition, "torsion is not normalized: " + d.front().name + " = " + d.front().value.to_string());
    ResidualCertificate c;
    const TorsionTensor moved = apply_gauge(T, GaugeParameters::residual(T.n(), p));
    c.defects = first_normalization_defects(moved);
    c.unchanged = moved == T;
    c.pass = c.defects.empty();
    return c;
}

PTensor::PTensor(unsigned n) : n_(n), pj_(n, 2), pjk_(n, 3), pcomma_(n, 3), pklm_(n, 4) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "P tensor needs n >= 1");
}

void PTensor::set_pjk(unsigned i, unsigned j, unsigned k, const Expression& v) {
    pjk_.at({i, j, k}) = v;
    pjk_.at({i, k, j}) = v;
}

void PTensor::set_pcomma(unsigned i, unsigned j, unsigned k, const Expression& v) {
    if (j == k && !v.is_zero())
        throw Error(ErrorKind::SymmetryViolation, label("Pcomma", {i, j, k}) + " must vanish on the diagonal");
    pcomma_.at({i, j, k}) = v;
    pcomma_.at({i, k, j}) = -v;
}

void PTensor::set_pklm(unsigned i, unsigned k, unsigned l, unsigned m, const Expression& v) {
    pklm_.at({i, k, l, m}) = v;
    pklm_.at({i, k, m, l}) = v;
}

void PTensor::validate() const {
    const unsigned n = n_;
    require_size(pj_, n, 2, "P^i_j");
    require_size(pjk_, n, 3, "P^i_jk");
    require_size(pcomma_, n, 3, "P^i,jk");
    require_size(pklm_, n, 4, "P^i_k,lm");
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) {
                require_equal(pjk(i, j, k), pjk(i, k, j), label("Pjk", {i, j, k}), label("Pjk", {i, k, j}));
                require_negated(pcomma(i, j, k), pcomma(i, k, j), label("Pcomma", {i, j, k}), label("Pcomma", {i, k, j}));
                for (unsigned m = 0; m < n; ++m)
                    require_equal(pklm(i, j, k, m), pklm(i, j, m, k), label("Pklm", {i, j, k, m}),
                                  label("Pklm", {i, j, m, k}));
            }
}

SecondGaugeParameters SecondGaugeParameters::zero(unsigned n) {
    return SecondGaugeParameters{Expression(0), std::vector<Expression>(n, Expression(0)), DenseTensor(n, 2)};
}

void SecondGaugeParameters::validate() const {
    const unsigned n = static_cast<unsigned>(h.size());
    require_size(hh, n, 2, "h_ij");
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            require_equal(hh.at({i, j}), hh.at({j, i}), label("h", {i, j}), label("h", {j, i}));
}

PTensor apply_second_gauge(const PTensor& P, const SecondGaugeParameters& g, const Expression& p) {
    P.validate();
    g.validate();
    const unsigned n = P.n();
    if (g.h.size() != n) throw Error(ErrorKind::InvalidArgument, "gauge parameters have the wrong n");
    const Expression shift = Expression(Rational(1, 4)) * p * p - kHalf * g.t;
    PTensor out = P;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            out.raw_pj().at({i, j}) = P.pj(i, j) - shift * delta(i, j);
            for (unsigned k = 0; k < n; ++k) {
                out.raw_pjk().at({i, j, k}) = P.pjk(i, j, k) + kHalf * (delta(i, j) * g.h[k] + delta(i, k) * g.h[j]);
                // Here j plays the role of the θ index k, (k, m) of the Θ pair (l, m).
                for (unsigned m = 0; m < n; ++m)
                    out.raw_pklm().at({i, j, k, m}) =
                        P.pklm(i, j, k, m) - kHalf * (delta(i, m) * g.hh.at({k, j}) + delta(i, k) * g.hh.at({m, j}));
            }
        }
    out.validate();
    return out;
}

std::vector<Condition> second_normalization_defects(const PTensor& P) {
    const unsigned n = P.n();
    std::vector<Condition> out;
    Expression trace;
    for (unsigned i = 0; i < n; ++i) trace += P.pj(i, i);
    add_if_nonzero(out, "sum_i P^i_i", trace);
    for (unsigned i = 0; i < n; ++i) add_if_nonzero(out, label("P^i_ii", {i}), P.pjk(i, i, i));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = i; k < n; ++k)
            add_if_nonzero(out, label("P^i_k,ii+P^k_i,kk", {i, k}), P.pklm(i, k, i, i) + P.pklm(k, i, k, k));
    return out;
}

SecondNormalization solve_second_normalization(const PTensor& P) {
    P.validate();
    const unsigned n = P.n();
    SecondGaugeParameters g = SecondGaugeParameters::zero(n);
    Expression trace;
    for (unsigned i = 0; i < n; ++i) {
        trace += P.pj(i, i);
        g.h[i] = -P.pjk(i, i, i);
        for (unsigned k = 0; k < n; ++k) g.hh.at({i, k}) = kHalf * (P.pklm(i, k, i, i) + P.pklm(k, i, k, k));
    }
    g.t = Expression(canonical(Rational(-2, static_cast<long>(n)))) * trace;
    SecondNormalization r{g, apply_second_gauge(P, g), {}};
    r.defects = second_normalization_defects(r.normalized);
    return r;
}

ResidualCertificate residual_second_gauge_preserves(const PTensor& P, const Expression& p) {
    if (auto d = second_normalization_defects(P); !d.empty())
        throw Error(ErrorKind::Precondition, "P is not normalized: " + d.front().name + " = " + d.front().value.to_string());
    SecondGaugeParameters g = SecondGaugeParameters::zero(P.n());
    g.t = kHalf * p * p;
    ResidualCertificate c;
    const PTensor moved = apply_second_gauge(P, g, p);
    c.defects = second_normalization_defects(moved);
    c.unchanged = moved == P;
    c.pass = c.defects.empty();
    return c;
}

TorsionTensor random_torsion(Rng& rng, unsigned n, long bound, long max_den) {
    TorsionTensor T(n);
    auto r = [&] { return Expression(rng.rational(bound, max_den)); };
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) {
                T.set_t0t(i, j, k, r());
                for (unsigned l = k; l < n; ++l) {
                    T.set_t0T(i, j, k, l, r());
                    if (l > k) T.set_tt(i, j, k, l, r());
                }
                for (unsigned l = 0; l < n; ++l)
                    for (unsigned m = l; m < n; ++m) T.set_tT(i, j, k, l, m, r());
            }
    return T;
}

PTensor random_p_tensor(Rng& rng, unsigned n, long bound, long max_den) {
    PTensor P(n);
    auto r = [&] { return Expression(rng.rational(bound, max_den)); };
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            P.set_pj(i, j, r());
            for (unsigned k = j; k < n; ++k) {
                P.set_pjk(i, j, k, r());
                if (k > j) P.set_pcomma(i, j, k, r());
            }
            for (unsigned l = 0; l < n; ++l)
                for (unsigned m = l; m < n; ++m) P.set_pklm(i, j, l, m, r());
        }
    return P;
}

} // namespace lpg::torsion
