#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "maxmat/linalg.hpp"

namespace maxmat {

enum class Var : std::size_t { t = 0, x = 1, y = 2, z = 3 };

inline constexpr std::array<Var, 4> kVars{Var::t, Var::x, Var::y, Var::z};
inline constexpr const char* var_name(Var v) {
    constexpr const char* names[] = {"t", "x", "y", "z"};
    return names[static_cast<std::size_t>(v)];
}

namespace sym_detail {

// Monomial exponents packed 16 bits per variable, t in the top lane, so
// key order is a deterministic term order and multiplication is key
// addition. Construction caps exponents well below the lane width.
using MonoKey = std::uint64_t;

inline constexpr unsigned kMaxInputExponent = 4096;
inline constexpr std::size_t kTermBudget = 1'000'000;

inline constexpr int lane_shift(Var v) { return 48 - 16 * static_cast<int>(v); }
inline unsigned exponent_of(MonoKey k, Var v) {
    return static_cast<unsigned>((k >> lane_shift(v)) & 0xFFFFu);
}
inline MonoKey make_key(const std::array<unsigned, 4>& e) {
    MonoKey k = 0;
    for (Var v : kVars) k |= MonoKey(e[static_cast<std::size_t>(v)] & 0xFFFFu) << lane_shift(v);
    return k;
}

using Poly = std::map<MonoKey, CQ>;

inline void poly_add_term(Poly& p, MonoKey k, const CQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

inline void poly_add_into(Poly& p, const Poly& q) {
    for (const auto& [k, c] : q) poly_add_term(p, k, c);
}

inline Poly poly_scale(const Poly& p, const CQ& s) {
    Poly r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : p) r.emplace(k, s * c);
    return r;
}

inline unsigned max_exponent(const Poly& p, Var v) {
    unsigned m = 0;
    for (const auto& [k, c] : p) m = std::max(m, exponent_of(k, v));
    return m;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    if (a.empty() || b.empty()) return r;
    for (Var v : kVars) {
        if (max_exponent(a, v) + max_exponent(b, v) > 60000u)
            throw resource_error("symbolic product: exponent overflow in " +
                                 std::string(var_name(v)));
    }
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            poly_add_term(r, ka + kb, ca * cb);
            if (r.size() > kTermBudget)
                throw resource_error("symbolic product exceeds the term budget");
        }
    return r;
}

inline Poly poly_derivative(const Poly& p, Var v) {
    Poly r;
    const int shift = lane_shift(v);
    for (const auto& [k, c] : p) {
        const unsigned e = exponent_of(k, v);
        if (e == 0) continue;
        poly_add_term(r, k - (MonoKey(1) << shift), CQ(Rational(e)) * c);
    }
    return r;
}

template <typename C>
C value_pow(const C& base, unsigned e) {
    C acc = C::one();
    for (unsigned i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

template <typename C, typename S>
C poly_eval(const Poly& p, const std::array<S, 4>& at) {
    C acc;
    for (const auto& [k, c] : p) {
        C term = [&c] {
            if constexpr (std::is_same_v<C, CQ>)
                return c;
            else
                return to_approx(c);
        }();
        for (Var v : kVars) {
            const unsigned e = exponent_of(k, v);
            if (e) term = term * value_pow(C(at[static_cast<std::size_t>(v)]), e);
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace sym_detail

/// Nonzero linear phase k.x - w t in canonical sign form: the first nonzero
/// coefficient in variable order t,x,y,z is positive. Zero phases never
/// exist as LinPhase values (they collapse into the polynomial part).
class LinPhase {
public:
    /// Canonicalize; `negated` reports whether the sign was flipped (the
    /// caller must then flip sine terms). Returns nullopt for a zero phase.
    struct Canonical;
    static std::optional<Canonical> make(const Rational& omega, const Rational& kx,
                                         const Rational& ky, const Rational& kz);

    const Rational& omega() const { return omega_; }
    const Rational& k(std::size_t i) const { return k_[i]; }

    /// Coefficient of the phase as a linear form over (t,x,y,z).
    Rational coefficient(Var v) const {
        if (v == Var::t) return -omega_;
        return k_[static_cast<std::size_t>(v) - 1];
    }

    Rational value_exact(const std::array<Rational, 4>& at) const {
        Rational acc = -omega_ * at[0];
        for (std::size_t i = 0; i < 3; ++i) acc += k_[i] * at[i + 1];
        return acc;
    }
    double value_approx(const std::array<double, 4>& at) const {
        double acc = -static_cast<double>(omega_) * at[0];
        for (std::size_t i = 0; i < 3; ++i) acc += static_cast<double>(k_[i]) * at[i + 1];
        return acc;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (Var v : kVars) {
            const Rational c = coefficient(v);
            if (c == 0) continue;
            const Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (mag != 1) os << format_rational(mag) << "*";
            os << var_name(v);
        }
        return os.str();
    }

    friend bool operator==(const LinPhase& a, const LinPhase& b) {
        return a.omega_ == b.omega_ && a.k_ == b.k_;
    }
    friend bool operator<(const LinPhase& a, const LinPhase& b) {
        if (a.omega_ != b.omega_) return a.omega_ < b.omega_;
        return a.k_ < b.k_;
    }

private:
    LinPhase() = default;
    Rational omega_;
    std::array<Rational, 3> k_;
};

struct LinPhase::Canonical {
    LinPhase phase;
    bool negated;
};

inline std::optional<LinPhase::Canonical> LinPhase::make(const Rational& omega,
                                                         const Rational& kx,
                                                         const Rational& ky,
                                                         const Rational& kz) {
    // coefficient of t is -omega
    const std::array<Rational, 4> form{-omega, kx, ky, kz};
    for (const Rational& c : form) {
        if (c == 0) continue;
        const bool neg = c < 0;
        LinPhase p;
        p.omega_ = neg ? Rational(-omega) : omega;
        p.k_ = {neg ? Rational(-kx) : kx, neg ? Rational(-ky) : ky, neg ? Rational(-kz) : kz};
        return Canonical{p, neg};
    }
    return std::nullopt;
}

/// Exact symbolic function of (t,x,y,z): a polynomial plus a finite sum of
/// Poly * cos(L) and Poly * sin(L) terms over canonical linear phases.
/// Closed under +, *, and partial differentiation; products of trig atoms
/// are rewritten by the product-to-sum identities, so equality of canonical
/// forms decides equality of functions.
class SymScalar {
public:
    using Poly = sym_detail::Poly;
    struct TrigParts {
        Poly cos_part;
        Poly sin_part;
        friend bool operator==(const TrigParts&, const TrigParts&) = default;
    };
    using TrigMap = std::map<LinPhase, TrigParts>;

    SymScalar() = default;

    static SymScalar constant(const CQ& c) {
        SymScalar s;
        sym_detail::poly_add_term(s.pure_, 0, c);
        return s;
    }
    static SymScalar one() { return constant(CQ::one()); }
    static SymScalar imag_unit() { return constant(CQ::imag_unit()); }
    static SymScalar from_rational(const Rational& r) { return constant(CQ(r)); }
    static SymScalar variable(Var v) {
        return monomial(CQ::one(), exponents_for(v));
    }
    static SymScalar monomial(const CQ& coeff, const std::array<unsigned, 4>& exps) {
        for (unsigned e : exps)
            if (e > sym_detail::kMaxInputExponent)
                throw std::invalid_argument("monomial exponent too large");
        SymScalar s;
        sym_detail::poly_add_term(s.pure_, sym_detail::make_key(exps), coeff);
        return s;
    }
    static SymScalar cosine(const Rational& omega, const Rational& kx, const Rational& ky,
                            const Rational& kz) {
        SymScalar s;
        Poly p;
        sym_detail::poly_add_term(p, 0, CQ::one());
        s.add_cos(omega, kx, ky, kz, p);
        return s;
    }
    static SymScalar sine(const Rational& omega, const Rational& kx, const Rational& ky,
                          const Rational& kz) {
        SymScalar s;
        Poly p;
        sym_detail::poly_add_term(p, 0, CQ::one());
        s.add_sin(omega, kx, ky, kz, p);
        return s;
    }

    bool is_zero() const { return pure_.empty() && trig_.empty(); }
    std::size_t term_count() const {
        std::size_t n = pure_.size();
        for (const auto& [l, t] : trig_) n += t.cos_part.size() + t.sin_part.size();
        return n;
    }

    const Poly& polynomial_part() const { return pure_; }
    const TrigMap& trig_part() const { return trig_; }

    SymScalar conj() const {
        SymScalar r;
        r.pure_ = conj_poly(pure_);
        for (const auto& [l, t] : trig_)
            r.trig_.emplace(l, TrigParts{conj_poly(t.cos_part), conj_poly(t.sin_part)});
        return r;
    }

    friend SymScalar operator+(const SymScalar& a, const SymScalar& b) {
        SymScalar r = a;
        sym_detail::poly_add_into(r.pure_, b.pure_);
        for (const auto& [l, t] : b.trig_) {
            TrigParts& dst = r.trig_[l];
            sym_detail::poly_add_into(dst.cos_part, t.cos_part);
            sym_detail::poly_add_into(dst.sin_part, t.sin_part);
        }
        r.prune();
        r.check_budget();
        return r;
    }
    friend SymScalar operator-(const SymScalar& a) {
        return scaled(a, -CQ::one());
    }
    friend SymScalar operator-(const SymScalar& a, const SymScalar& b) { return a + (-b); }

    friend SymScalar operator*(const SymScalar& a, const SymScalar& b) {
        using namespace sym_detail;
        SymScalar r;
        r.pure_ = poly_mul(a.pure_, b.pure_);
        for (const auto& [l, t] : b.trig_) {
            r.add_cos_canon(l, poly_mul(a.pure_, t.cos_part));
            r.add_sin_canon(l, poly_mul(a.pure_, t.sin_part));
        }
        for (const auto& [l, t] : a.trig_) {
            r.add_cos_canon(l, poly_mul(b.pure_, t.cos_part));
            r.add_sin_canon(l, poly_mul(b.pure_, t.sin_part));
        }
        const CQ half = CQ::from_rational(Rational(1, 2));
        for (const auto& [l1, t1] : a.trig_)
            for (const auto& [l2, t2] : b.trig_) {
                // phases of the sum and difference atoms
                const Rational wd = l1.omega() - l2.omega();
                const Rational ws = l1.omega() + l2.omega();
                std::array<Rational, 3> kd, ks;
                for (std::size_t i = 0; i < 3; ++i) {
                    kd[i] = l1.k(i) - l2.k(i);
                    ks[i] = l1.k(i) + l2.k(i);
                }
                const Poly cc = poly_scale(poly_mul(t1.cos_part, t2.cos_part), half);
                const Poly ss = poly_scale(poly_mul(t1.sin_part, t2.sin_part), half);
                const Poly sc = poly_scale(poly_mul(t1.sin_part, t2.cos_part), half);
                const Poly cs = poly_scale(poly_mul(t1.cos_part, t2.sin_part), half);
                // cos cos = (cos(d) + cos(s))/2; sin sin = (cos(d) - cos(s))/2
                r.add_cos(wd, kd[0], kd[1], kd[2], cc);
                r.add_cos(ws, ks[0], ks[1], ks[2], cc);
                r.add_cos(wd, kd[0], kd[1], kd[2], ss);
                r.add_cos(ws, ks[0], ks[1], ks[2], sym_detail::poly_scale(ss, -CQ::one()));
                // sin cos = (sin(s) + sin(d))/2; cos sin = (sin(s) - sin(d))/2
                r.add_sin(ws, ks[0], ks[1], ks[2], sc);
                r.add_sin(wd, kd[0], kd[1], kd[2], sc);
                r.add_sin(ws, ks[0], ks[1], ks[2], cs);
                r.add_sin(wd, kd[0], kd[1], kd[2], sym_detail::poly_scale(cs, -CQ::one()));
            }
        r.prune();
        r.check_budget();
        return r;
    }

    friend bool operator==(const SymScalar& a, const SymScalar& b) {
        return a.pure_ == b.pure_ && a.trig_ == b.trig_;
    }

    /// Exact partial derivative.
    SymScalar derivative(Var v) const {
        using namespace sym_detail;
        SymScalar r;
        r.pure_ = poly_derivative(pure_, v);
        for (const auto& [l, t] : trig_) {
            const CQ c = CQ(l.coefficient(v));
            TrigParts parts;
            parts.cos_part = poly_derivative(t.cos_part, v);
            parts.sin_part = poly_derivative(t.sin_part, v);
            if (!c.is_zero()) {
                // d(P cos L) = P' cos L - cP sin L; d(P sin L) = P' sin L + cP cos L
                poly_add_into(parts.sin_part, poly_scale(t.cos_part, -c));
                poly_add_into(parts.cos_part, poly_scale(t.sin_part, c));
            }
            r.add_cos_canon(l, parts.cos_part);
            r.add_sin_canon(l, parts.sin_part);
        }
        r.prune();
        return r;
    }

    /// Exact evaluation. Trig atoms are only exact where the phase value is
    /// zero; a contributing atom at a nonzero phase is a domain error.
    CQ eval_exact(const std::array<Rational, 4>& at) const {
        using namespace sym_detail;
        CQ acc = poly_eval<CQ>(pure_, at);
        for (const auto& [l, t] : trig_) {
            const Rational phase = l.value_exact(at);
            if (phase == 0) {
                acc = acc + poly_eval<CQ>(t.cos_part, at);  // cos 0 = 1, sin 0 = 0
            } else {
                if (!poly_eval<CQ>(t.cos_part, at).is_zero() ||
                    !poly_eval<CQ>(t.sin_part, at).is_zero())
                    throw std::domain_error(
                        "eval_exact: trig atom at nonzero phase needs approximate mode");
            }
        }
        return acc;
    }

    CD eval(const std::array<double, 4>& at) const {
        using namespace sym_detail;
        CD acc = poly_eval<CD>(pure_, at);
        for (const auto& [l, t] : trig_) {
            const double phase = l.value_approx(at);
            acc = acc + CD(std::cos(phase)) * poly_eval<CD>(t.cos_part, at);
            acc = acc + CD(std::sin(phase)) * poly_eval<CD>(t.sin_part, at);
        }
        return acc;
    }

    std::string str() const;

private:
    static std::array<unsigned, 4> exponents_for(Var v) {
        std::array<unsigned, 4> e{};
        e[static_cast<std::size_t>(v)] = 1;
        return e;
    }
    static Poly conj_poly(const Poly& p) {
        Poly r;
        for (const auto& [k, c] : p) r.emplace(k, c.conj());
        return r;
    }
    static SymScalar scaled(const SymScalar& a, const CQ& s) {
        SymScalar r;
        r.pure_ = sym_detail::poly_scale(a.pure_, s);
        for (const auto& [l, t] : a.trig_)
            r.trig_.emplace(l, TrigParts{sym_detail::poly_scale(t.cos_part, s),
                                         sym_detail::poly_scale(t.sin_part, s)});
        r.prune();
        return r;
    }

    // Accumulate P cos/sin of a raw (possibly zero or non-canonical) phase.
    void add_cos(const Rational& w, const Rational& kx, const Rational& ky,
                 const Rational& kz, const Poly& p) {
        if (p.empty()) return;
        auto canon = LinPhase::make(w, kx, ky, kz);
        if (!canon) {
            sym_detail::poly_add_into(pure_, p);  // cos 0 = 1
            return;
        }
        sym_detail::poly_add_into(trig_[canon->phase].cos_part, p);
    }
    void add_sin(const Rational& w, const Rational& kx, const Rational& ky,
                 const Rational& kz, const Poly& p) {
        if (p.empty()) return;
        auto canon = LinPhase::make(w, kx, ky, kz);
        if (!canon) return;  // sin 0 = 0
        if (canon->negated)
            sym_detail::poly_add_into(trig_[canon->phase].sin_part,
                                      sym_detail::poly_scale(p, -CQ::one()));
        else
            sym_detail::poly_add_into(trig_[canon->phase].sin_part, p);
    }
    // Already-canonical fast paths.
    void add_cos_canon(const LinPhase& l, const Poly& p) {
        if (!p.empty()) sym_detail::poly_add_into(trig_[l].cos_part, p);
    }
    void add_sin_canon(const LinPhase& l, const Poly& p) {
        if (!p.empty()) sym_detail::poly_add_into(trig_[l].sin_part, p);
    }

    void prune() {
        for (auto it = trig_.begin(); it != trig_.end();) {
            if (it->second.cos_part.empty() && it->second.sin_part.empty())
                it = trig_.erase(it);
            else
                ++it;
        }
    }
    void check_budget() const {
        if (term_count() > sym_detail::kTermBudget)
            throw resource_error("symbolic expression exceeds the term budget");
    }

    Poly pure_;
    TrigMap trig_;
};

static_assert(ring<SymScalar>);

using SymVec3 = Vec3<SymScalar>;
using SymVec4 = Vec4<SymScalar>;
using SymMat4 = Mat4<SymScalar>;

inline SymScalar partial(const SymScalar& f, Var v) { return f.derivative(v); }

inline SymVec3 grad(const SymScalar& f) {
    return {f.derivative(Var::x), f.derivative(Var::y), f.derivative(Var::z)};
}
inline SymScalar divergence(const SymVec3& v) {
    return v[0].derivative(Var::x) + v[1].derivative(Var::y) + v[2].derivative(Var::z);
}
inline SymVec3 curl(const SymVec3& v) {
    return {v[2].derivative(Var::y) - v[1].derivative(Var::z),
            v[0].derivative(Var::z) - v[2].derivative(Var::x),
            v[1].derivative(Var::x) - v[0].derivative(Var::y)};
}
inline SymScalar dt(const SymScalar& f) { return f.derivative(Var::t); }
inline SymVec3 dt(const SymVec3& v) {
    return {dt(v[0]), dt(v[1]), dt(v[2])};
}

/// d'Alembert-style operator dtt - laplacian (wave operator).
inline SymScalar wave_op(const SymScalar& f) {
    return f.derivative(Var::t).derivative(Var::t) -
           (f.derivative(Var::x).derivative(Var::x) +
            f.derivative(Var::y).derivative(Var::y) +
            f.derivative(Var::z).derivative(Var::z));
}
inline SymVec4 wave_op(const SymVec4& v) {
    return {wave_op(v[0]), wave_op(v[1]), wave_op(v[2]), wave_op(v[3])};
}

enum class TimeSign { minus, plus };

/// Divergence of a matrix field against the operator vector (s dt, grad):
/// row i maps to s dt(M_i0) + dx(M_i1) + dy(M_i2) + dz(M_i3).
inline SymVec4 matrix_divergence(const SymMat4& m, TimeSign sign) {
    SymVec4 r;
    for (std::size_t i = 0; i < 4; ++i) {
        SymScalar s = m(i, 0).derivative(Var::t);
        if (sign == TimeSign::minus) s = -s;
        s = s + m(i, 1).derivative(Var::x) + m(i, 2).derivative(Var::y) +
            m(i, 3).derivative(Var::z);
        r[i] = s;
    }
    return r;
}

/// The four coefficient matrices of dM (one per coordinate one-form).
inline std::array<SymMat4, 4> differential(const SymMat4& m) {
    std::array<SymMat4, 4> d;
    for (Var v : kVars)
        for (std::size_t k = 0; k < 16; ++k)
            d[static_cast<std::size_t>(v)].e[k] = m.e[k].derivative(v);
    return d;
}

/// The operator matrix [[0, grad^t],[grad, i x(grad)]] applied to a
/// four-component field: (div f, grad f0 - i curl f).
inline SymVec4 cbar_nabla(const SymVec4& f) {
    const SymVec3 fs = f.spatial();
    const SymScalar i = SymScalar::imag_unit();
    const SymVec3 g = grad(f[0]);
    const SymVec3 c = curl(fs);
    return {divergence(fs), Vec3<SymScalar>{g[0] - i * c[0], g[1] - i * c[1], g[2] - i * c[2]}};
}

/// One factor of the wave-operator factorization: dt f - cbar_nabla f or
/// dt f + cbar_nabla f. Composing the two signs gives wave_op on each
/// component.
inline SymVec4 wave_factor(TimeSign sign, const SymVec4& f) {
    const SymVec4 d{dt(f[0]), dt(f[1]), dt(f[2]), dt(f[3])};
    const SymVec4 n = cbar_nabla(f);
    return sign == TimeSign::plus ? d + n : d - n;
}

inline std::string SymScalar::str() const {
    using namespace sym_detail;
    auto cq_str = [](const CQ& c) {
        std::ostringstream os;
        if (c.im == 0) {
            os << format_rational(c.re);
        } else if (c.re == 0) {
            if (c.im == 1)
                os << "i";
            else if (c.im == -1)
                os << "-i";
            else
                os << format_rational(c.im) << "i";
        } else {
            os << "(" << format_rational(c.re) << (c.im < 0 ? " - " : " + ");
            const Rational m = c.im < 0 ? Rational(-c.im) : c.im;
            if (m != 1) os << format_rational(m);
            os << "i)";
        }
        return os.str();
    };
    auto mono_str = [](MonoKey k) {
        std::ostringstream os;
        bool first = true;
        for (Var v : kVars) {
            const unsigned e = exponent_of(k, v);
            if (!e) continue;
            if (!first) os << "*";
            os << var_name(v);
            if (e > 1) os << "^" << e;
            first = false;
        }
        return os.str();
    };
    auto term_str = [&](const CQ& c, const std::string& mono) {
        if (mono.empty()) return cq_str(c);
        if (c == CQ::one()) return mono;
        if (c == -CQ::one()) return "-" + mono;
        return cq_str(c) + "*" + mono;
    };
    std::ostringstream os;
    bool first = true;
    auto append = [&](std::string term) {
        if (first) {
            os << term;
            first = false;
        } else if (!term.empty() && term[0] == '-') {
            os << " - " << term.substr(1);
        } else {
            os << " + " << term;
        }
    };
    if (is_zero()) return "0";
    for (const auto& [k, c] : pure_) append(term_str(c, mono_str(k)));
    for (const auto& [l, t] : trig_) {
        for (const auto* part : {&t.cos_part, &t.sin_part}) {
            if (part->empty()) continue;
            const char* atom = part == &t.cos_part ? "cos(" : "sin(";
            std::string factor;
            if (part->size() == 1) {
                factor = term_str(part->begin()->second, mono_str(part->begin()->first));
                if (!factor.empty() && factor != "1") factor += "*";
                if (factor == "1") factor.clear();
            } else {
                std::ostringstream ps;
                bool p_first = true;
                for (const auto& [k, c] : *part) {
                    const std::string term = term_str(c, mono_str(k));
                    if (p_first) {
                        ps << term;
                        p_first = false;
                    } else if (!term.empty() && term[0] == '-') {
                        ps << " - " << term.substr(1);
                    } else {
                        ps << " + " << term;
                    }
                }
                factor = "(" + ps.str() + ")*";
            }
            append(factor + atom + l.str() + ")");
        }
    }
    return os.str();
}

}  // namespace maxmat
