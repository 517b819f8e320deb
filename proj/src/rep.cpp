#include "lpgeom/rep.hpp"

#include "lpgeom/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace lpg::rep {

AlgebraId AlgebraId::sp(unsigned n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "sp(n) needs n >= 1");
    return AlgebraId{Family::Symplectic, n};
}

AlgebraId AlgebraId::so(unsigned m) {
    if (m < 3) throw Error(ErrorKind::InvalidArgument, "so(m) needs m >= 3");
    return AlgebraId{Family::Orthogonal, m};
}

unsigned AlgebraId::rank() const { return family == Family::Symplectic ? parameter : parameter / 2; }

char AlgebraId::type() const {
    if (family == Family::Symplectic) return 'C';
    return parameter % 2 ? 'B' : 'D';
}

std::string AlgebraId::to_string() const {
    return (family == Family::Symplectic ? "sp(" : "so(") + std::to_string(parameter) + ")";
}

IrrepLabel::IrrepLabel(AlgebraId a, std::vector<unsigned> h) : algebra(a), highest(std::move(h)) {
    if (highest.size() != algebra.rank())
        throw Error(ErrorKind::InvalidArgument, algebra.to_string() + " labels need " + std::to_string(algebra.rank()) +
                                                    " entries, got " + std::to_string(highest.size()));
}

IrrepLabel IrrepLabel::trivial(AlgebraId a) { return IrrepLabel(a, std::vector<unsigned>(a.rank(), 0)); }

IrrepLabel IrrepLabel::fundamental(AlgebraId a, unsigned k, unsigned multiple) {
    if (k == 0 || k > a.rank()) throw Error(ErrorKind::InvalidArgument, "no fundamental weight " + std::to_string(k));
    std::vector<unsigned> h(a.rank(), 0);
    h[k - 1] = multiple;
    return IrrepLabel(a, h);
}

bool IrrepLabel::group_integral() const {
    const unsigned r = algebra.rank();
    switch (algebra.type()) {
    case 'B': return highest[r - 1] % 2 == 0;
    case 'D': return (highest[r - 2] + highest[r - 1]) % 2 == 0;
    default: return true;
    }
}

std::string IrrepLabel::to_string() const {
    std::string s = algebra.to_string() + "[";
    for (std::size_t i = 0; i < highest.size(); ++i) s += (i ? "," : "") + std::to_string(highest[i]);
    return s + "]";
}

namespace {

/// Root system data in doubled ε coordinates.
struct RootSystem {
    AlgebraId algebra;
    unsigned r;
    std::vector<Weight> simple;    // doubled
    std::vector<Weight> positive;  // doubled
    std::vector<Weight> fundamental;
    Weight rho;  // doubled
};

Weight unit(unsigned r, unsigned i, int v) {
    Weight w(r, 0);
    w[i] = v;
    return w;
}

Weight operator+(Weight a, const Weight& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Weight operator-(Weight a, const Weight& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

Weight scaled(Weight a, int k) {
    for (auto& x : a) x *= k;
    return a;
}

long dot(const Weight& a, const Weight& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return s;
}

RootSystem root_system(const AlgebraId& a) {
    RootSystem s{a, a.rank(), {}, {}, {}, {}};
    const unsigned r = s.r;
    const char t = a.type();
    if (t == 'D' && r < 2) throw Error(ErrorKind::InvalidArgument, "so(m) needs m >= 3");
    for (unsigned i = 0; i + 1 < r; ++i) s.simple.push_back(unit(r, i, 2) + unit(r, i + 1, -2));
    if (t == 'C') s.simple.push_back(unit(r, r - 1, 4));
    if (t == 'B') s.simple.push_back(unit(r, r - 1, 2));
    if (t == 'D') s.simple.push_back(unit(r, r - 2, 2) + unit(r, r - 1, 2));
    for (unsigned i = 0; i < r; ++i) {
        for (unsigned j = i + 1; j < r; ++j) {
            s.positive.push_back(unit(r, i, 2) + unit(r, j, -2));
            s.positive.push_back(unit(r, i, 2) + unit(r, j, 2));
        }
        if (t == 'C') s.positive.push_back(unit(r, i, 4));
        if (t == 'B') s.positive.push_back(unit(r, i, 2));
    }
    for (unsigned k = 1; k <= r; ++k) {
        Weight w(r, 0);
        if (t == 'B' && k == r) {
            std::fill(w.begin(), w.end(), 1);
        } else if (t == 'D' && k >= r - 1) {
            std::fill(w.begin(), w.end(), 1);
            if (k == r - 1) w[r - 1] = -1;
        } else {
            for (unsigned i = 0; i < k; ++i) w[i] = 2;
        }
        s.fundamental.push_back(w);
    }
    s.rho = Weight(r, 0);
    for (const auto& p : s.positive) s.rho = s.rho + p;
    for (auto& x : s.rho) x /= 2;
    return s;
}

Weight to_weight(const RootSystem& s, const std::vector<unsigned>& label) {
    Weight w(s.r, 0);
    for (unsigned k = 0; k < s.r; ++k) w = w + scaled(s.fundamental[k], static_cast<int>(label[k]));
    return w;
}

std::vector<unsigned> to_label(const RootSystem& s, const Weight& w) {
    std::vector<unsigned> label;
    for (const auto& a : s.simple) {
        const long num = 2 * dot(w, a), den = dot(a, a);
        if (num % den != 0 || num < 0) throw Error(ErrorKind::InvalidArgument, "weight is not dominant integral");
        label.push_back(static_cast<unsigned>(num / den));
    }
    return label;
}

Weight dominant_conjugate(const RootSystem& s, Weight w) {
    bool odd_negatives = false, has_zero = false;
    for (auto& x : w) {
        if (x < 0) {
            odd_negatives = !odd_negatives;
            x = -x;
        }
        has_zero = has_zero || x == 0;
    }
    std::sort(w.begin(), w.end(), std::greater<>());
    if (s.algebra.type() == 'D' && odd_negatives && !has_zero) w.back() = -w.back();
    return w;
}

// True when a doubled-ε vector is a nonnegative integer combination of simple roots.
bool in_positive_root_cone(const RootSystem& s, const Weight& doubled) {
    const unsigned r = s.r;
    std::vector<long> v(r);
    for (unsigned i = 0; i < r; ++i) {
        if (doubled[i] % 2 != 0) return false;
        v[i] = doubled[i] / 2;
    }
    std::vector<long> twice(r);  // 2 * coefficient
    long partial = 0;
    for (unsigned k = 0; k < r; ++k) {
        partial += v[k];
        twice[k] = 2 * partial;
    }
    const char t = s.algebra.type();
    if (t == 'C') twice[r - 1] = partial;
    if (t == 'D') {
        const long S = r >= 2 ? std::accumulate(v.begin(), v.end() - 2, 0L) : 0;
        twice[r - 1] = S + v[r - 2] + v[r - 1];
        twice[r - 2] = S + v[r - 2] - v[r - 1];
    }
    for (long c : twice)
        if (c < 0 || c % 2 != 0) return false;
    return true;
}

bool is_weight_of(const RootSystem& s, const Weight& lambda, const Weight& mu) {
    return in_positive_root_cone(s, lambda - dominant_conjugate(s, mu));
}

std::int64_t exact_quotient(long num, long den) {
    if (den <= 0 || num % den != 0) throw Error(ErrorKind::InvalidArgument, "internal: Freudenthal quotient is not exact");
    return num / den;
}

} // namespace

std::uint64_t weyl_dimension(const IrrepLabel& label) {
    const RootSystem s = root_system(label.algebra);
    const Weight lr = to_weight(s, label.highest) + s.rho;
    Rational d(1);
    for (const auto& a : s.positive) {
        Rational f(dot(lr, a), dot(s.rho, a));
        f.canonicalize();
        d *= f;
    }
    if (!is_integer(d)) throw Error(ErrorKind::InvalidArgument, "internal: Weyl dimension is not an integer");
    return d.get_num().get_ui();
}

Character character(const IrrepLabel& label) {
    const RootSystem s = root_system(label.algebra);
    const Weight lambda = to_weight(s, label.highest);
    const long top = dot(lambda + s.rho, lambda + s.rho);
    // Breadth-first by level below lambda.
    std::vector<std::vector<Weight>> levels{{lambda}};
    Character chi{{lambda, 1}};
    while (true) {
        std::set<Weight> next;
        for (const auto& w : levels.back())
            for (const auto& a : s.simple) {
                Weight m = w - a;
                if (!chi.count(m) && is_weight_of(s, lambda, m)) next.insert(m);
            }
        if (next.empty()) break;
        for (const auto& m : next) {
            long num = 0;
            for (const auto& a : s.positive)
                for (Weight up = m + a;; up = up + a) {
                    auto it = chi.find(up);
                    if (it == chi.end()) break;
                    num += 2 * it->second * dot(up, a);
                }
            chi[m] = exact_quotient(num, top - dot(m + s.rho, m + s.rho));
        }
        levels.emplace_back(next.begin(), next.end());
    }
    return chi;
}

std::int64_t dimension(const Character& chi) {
    std::int64_t d = 0;
    for (const auto& [w, m] : chi) d += m;
    return d;
}

Character product(const Character& a, const Character& b) {
    Character out;
    for (const auto& [wa, ma] : a)
        for (const auto& [wb, mb] : b) out[wa + wb] += ma * mb;
    return out;
}

Character sum(const Character& a, const Character& b) {
    Character out = a;
    for (const auto& [w, m] : b) out[w] += m;
    return out;
}

namespace {

Character adams2(const Character& chi) {
    Character out;
    for (const auto& [w, m] : chi) out[scaled(w, 2)] += m;
    return out;
}

Character halve(const Character& chi) {
    Character out;
    for (const auto& [w, m] : chi) {
        if (m % 2 != 0) throw Error(ErrorKind::InvalidArgument, "internal: odd coefficient in a symmetric power");
        if (m != 0) out[w] = m / 2;
    }
    return out;
}

} // namespace

Character exterior_square(const Character& chi) {
    Character sq = product(chi, chi);
    for (const auto& [w, m] : adams2(chi)) sq[w] -= m;
    return halve(sq);
}

Character symmetric_square(const Character& chi) {
    Character sq = product(chi, chi);
    for (const auto& [w, m] : adams2(chi)) sq[w] += m;
    return halve(sq);
}

std::vector<IrrepLabel> decompose(const AlgebraId& algebra, Character chi) {
    const RootSystem s = root_system(algebra);
    std::vector<IrrepLabel> out;
    while (true) {
        const Weight* best = nullptr;
        long best_height = 0;
        for (const auto& [w, m] : chi) {
            if (m < 0) throw Error(ErrorKind::InvalidArgument, "not a character: negative multiplicity");
            if (m == 0) continue;
            const long h = dot(w, s.rho);
            if (!best || h > best_height) {
                best = &w;
                best_height = h;
            }
        }
        if (!best) break;
        const IrrepLabel label(algebra, to_label(s, *best));
        const std::int64_t mult = chi.at(*best);
        for (const auto& [w, m] : character(label)) chi[w] -= mult * m;
        for (std::int64_t k = 0; k < mult; ++k) out.push_back(label);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IrrepLabel> tensor_decompose(const IrrepLabel& a, const IrrepLabel& b) {
    if (!(a.algebra == b.algebra))
        throw Error(ErrorKind::InvalidArgument, "labels of " + a.algebra.to_string() + " and " + b.algebra.to_string());
    if (a.algebra.rank() > 3)
        throw Error(ErrorKind::InvalidArgument, "tensor decomposition is limited to rank <= 3");
    return decompose(a.algebra, product(character(a), character(b)));
}

namespace {

std::vector<unsigned> label_with(unsigned n, std::initializer_list<std::pair<unsigned, unsigned>> entries) {
    std::vector<unsigned> h(n, 0);
    for (auto [pos, val] : entries) h[pos - 1] = val;
    return h;
}

DecompositionCheck make_check(std::string name, std::vector<IrrepLabel> expected, std::vector<IrrepLabel> computed,
                              std::int64_t total) {
    DecompositionCheck c{std::move(name), expected, std::move(computed), "", false};
    std::sort(c.expected.begin(), c.expected.end());
    // The ledger lists summands in the stated order when they match, else by descending dimension.
    std::vector<std::uint64_t> dims;
    if (c.expected == c.computed) {
        for (const auto& l : expected) dims.push_back(weyl_dimension(l));
    } else {
        for (const auto& l : c.computed) dims.push_back(weyl_dimension(l));
        std::sort(dims.begin(), dims.end(), std::greater<>());
    }
    c.ledger = std::to_string(total) + " =";
    std::int64_t s = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        c.ledger += (i ? "+" : " ") + std::to_string(dims[i]);
        s += static_cast<std::int64_t>(dims[i]);
    }
    c.pass = c.expected == c.computed && s == total;
    return c;
}

} // namespace

std::vector<DecompositionCheck> verify_decompositions(unsigned n) {
    if (n < 2 || n > 3) throw Error(ErrorKind::InvalidArgument, "decompositions are checked for n = 2, 3");
    const AlgebraId g = AlgebraId::sp(n);
    const IrrepLabel V = IrrepLabel::fundamental(g, 1), L2 = IrrepLabel::fundamental(g, 2),
                     S2 = IrrepLabel::fundamental(g, 1, 2), R = IrrepLabel::trivial(g);
    const Character chiV = character(V);
    std::vector<DecompositionCheck> out;

    const Character wedge2 = exterior_square(chiV);
    out.push_back(make_check("wedge2_V", {L2, R}, decompose(g, wedge2), dimension(wedge2)));

    const Character sym2 = symmetric_square(chiV);
    out.push_back(make_check("sym2_V", {S2}, decompose(g, sym2), dimension(sym2)));

    const Character s2l2 = product(character(S2), character(L2));
    std::vector<IrrepLabel> expected;
    if (n == 2) {
        expected = {IrrepLabel(g, {2, 1}), IrrepLabel(g, {2, 0}), IrrepLabel(g, {0, 1})};
    } else {
        expected = {IrrepLabel(g, label_with(n, {{1, 2}, {2, 1}})), IrrepLabel(g, label_with(n, {{1, 1}, {3, 1}})),
                    IrrepLabel(g, label_with(n, {{1, 2}})), IrrepLabel(g, label_with(n, {{2, 1}}))};
    }
    out.push_back(make_check("sym2_V_x_L2", expected, decompose(g, s2l2), dimension(s2l2)));

    const Character s2v = product(character(S2), chiV);
    out.push_back(make_check("sym2_V_x_V",
                             {IrrepLabel::fundamental(g, 1, 3), V, IrrepLabel(g, label_with(n, {{1, 1}, {2, 1}}))},
                             decompose(g, s2v), dimension(s2v)));
    return out;
}

VPieceProjector::VPieceProjector(unsigned n) : n_(n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "projector needs n >= 1");
    const unsigned d = 2 * n;
    for (unsigned a = 0; a < d; ++a)
        for (unsigned b = a; b < d; ++b)
            for (unsigned c = 0; c < d; ++c) index_.push_back({a, b, c});
    omega_.assign(d * d, Rational(0));
    omega_inv_.assign(d * d, Rational(0));
    for (unsigned i = 0; i < n; ++i) {
        omega_[i * d + n + i] = 1;
        omega_[(n + i) * d + i] = -1;
        omega_inv_[i * d + n + i] = -1;
        omega_inv_[(n + i) * d + i] = 1;
    }
}

std::size_t VPieceProjector::slot(unsigned a, unsigned b, unsigned c) const {
    if (a > b) std::swap(a, b);
    const unsigned d = 2 * n_;
    // Rows before a: Σ_{i<a} (d − i) pairs, each with d values of c.
    const std::size_t pairs_before = static_cast<std::size_t>(a) * d - static_cast<std::size_t>(a) * (a - 1) / 2;
    return (pairs_before + (b - a)) * d + c;
}

std::vector<Rational> VPieceProjector::contract(const std::vector<Rational>& t) const {
    const unsigned d = 2 * n_;
    std::vector<Rational> v(d, Rational(0));
    for (unsigned a = 0; a < d; ++a)
        for (unsigned b = 0; b < d; ++b)
            for (unsigned c = 0; c < d; ++c)
                if (omega_inv_[b * d + c] != 0) v[a] += t[slot(a, b, c)] * omega_inv_[b * d + c];
    return v;
}

std::vector<Rational> VPieceProjector::include(const std::vector<Rational>& v) const {
    const unsigned d = 2 * n_;
    std::vector<Rational> t(dimension(), Rational(0));
    for (std::size_t s = 0; s < index_.size(); ++s) {
        const auto [a, b, c] = index_[s];
        t[s] = v[a] * omega_[b * d + c] + v[b] * omega_[a * d + c];
    }
    return t;
}

std::vector<Rational> VPieceProjector::apply(const std::vector<Rational>& t) const {
    if (t.size() != dimension()) throw Error(ErrorKind::InvalidArgument, "element has the wrong dimension");
    auto out = include(contract(t));
    const Rational scale(-1, 2 * n_ + 1);
    for (auto& x : out) x *= scale;
    return out;
}

std::vector<Rational> VPieceProjector::act(const std::vector<Rational>& X, const std::vector<Rational>& t) const {
    const unsigned d = 2 * n_;
    std::vector<Rational> out(dimension(), Rational(0));
    for (std::size_t s = 0; s < index_.size(); ++s) {
        const auto [a, b, c] = index_[s];
        Rational v(0);
        for (unsigned e = 0; e < d; ++e)
            v += X[e * d + a] * t[slot(e, b, c)] + X[e * d + b] * t[slot(a, e, c)] + X[e * d + c] * t[slot(a, b, e)];
        out[s] = v;
    }
    return out;
}

namespace {

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::size_t VPieceProjector::rank() const {
    std::vector<std::vector<Rational>> cols;
    for (std::size_t i = 0; i < dimension(); ++i) {
        std::vector<Rational> e(dimension(), Rational(0));
        e[i] = 1;
        cols.push_back(apply(e));
    }
    return rational_rank(std::move(cols));
}

bool VPieceProjector::idempotent() const {
    for (std::size_t i = 0; i < dimension(); ++i) {
        std::vector<Rational> e(dimension(), Rational(0));
        e[i] = 1;
        const auto once = apply(e);
        if (apply(once) != once) return false;
    }
    return true;
}

bool VPieceProjector::admissible(const std::vector<Rational>& t) const {
    for (const auto& x : apply(t))
        if (x != 0) return false;
    return true;
}

std::vector<Rational> random_sp_element(Rng& rng, unsigned n) {
    const unsigned d = 2 * n;
    std::vector<Rational> S(d * d, Rational(0)), X(d * d, Rational(0));
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = i; j < d; ++j) S[i * d + j] = S[j * d + i] = rng.rational(3, 2);
    // X = J S with J = (0, I; -I, 0).
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) X[i * d + j] = i < n ? S[(i + n) * d + j] : -S[(i - n) * d + j];
    return X;
}

bool SoAudit::pass() const {
    if (n < 4) return smallest > 0;
    return smallest_is_vector && next_at_least_half && half_exceeds_2n && complement_small;
}

SoAudit so_minimal_dims(unsigned n) {
    if (n < 2 || n > 6) throw Error(ErrorKind::InvalidArgument, "so_minimal_dims supports 2 <= n <= 6");
    const AlgebraId g = AlgebraId::so(n + 1);
    const unsigned r = g.rank();
    SoAudit audit;
    audit.n = n;
    audit.half_n_n1 = static_cast<std::uint64_t>(n) * (n + 1) / 2;
    audit.bound = std::max<std::uint64_t>(2 * n + 1, audit.half_n_n1);
    audit.complement = 2 * n - (n + 1);

    // Weyl dimensions grow in every label coordinate, so prune per position.
    std::vector<unsigned> label(r, 0);
    std::function<void(unsigned)> walk = [&](unsigned pos) {
        if (pos == r) {
            const IrrepLabel l(g, label);
            if (l == IrrepLabel::trivial(g) || !l.group_integral()) return;
            std::uint64_t d = weyl_dimension(l);
            // so(2r) with r odd: conjugate pairs (a_{r-1} != a_r) are one real irrep of twice the dimension.
            if (g.type() == 'D' && r % 2 == 1 && label[r - 2] != label[r - 1]) {
                if (label[r - 2] > label[r - 1]) return;
                d *= 2;
            }
            if (d <= audit.bound) audit.dimensions.push_back(d);
            return;
        }
        for (unsigned a = 0;; ++a) {
            label[pos] = a;
            std::fill(label.begin() + pos + 1, label.end(), 0);
            if (weyl_dimension(IrrepLabel(g, label)) > 2 * audit.bound) break;
            walk(pos + 1);
        }
        label[pos] = 0;
    };
    walk(0);
    std::sort(audit.dimensions.begin(), audit.dimensions.end());
    if (!audit.dimensions.empty()) audit.smallest = audit.dimensions[0];
    if (audit.dimensions.size() > 1) audit.next = audit.dimensions[1];
    audit.smallest_is_vector = audit.smallest == n + 1;
    audit.next_at_least_half = audit.next >= audit.half_n_n1;
    audit.half_exceeds_2n = audit.half_n_n1 > 2 * n;
    audit.complement_small = audit.complement < n + 1;
    return audit;
}

} // namespace lpg::rep
