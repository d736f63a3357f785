#include "grmds/zmod.hpp"

#include <sstream>

namespace grmds {

namespace {

void check_mod(std::uint64_t mod) {
    if (mod < 2 || mod > kMaxModulus)
        throw InvalidInputError("modulus out of range [2, 2^31]: " + std::to_string(mod));
}

void check_same(std::uint64_t a, std::uint64_t b) {
    if (a != b)
        throw ContextMismatchError("residue moduli differ: " + std::to_string(a) +
                                   " vs " + std::to_string(b));
}

}  // namespace

Residue make_residue(std::int64_t v, std::uint64_t mod) {
    check_mod(mod);
    std::int64_t m = static_cast<std::int64_t>(mod);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return Residue{static_cast<std::uint64_t>(r), mod};
}

Residue add(Residue a, Residue b) {
    check_same(a.mod, b.mod);
    return Residue{(a.value + b.value) % a.mod, a.mod};
}

Residue sub(Residue a, Residue b) {
    check_same(a.mod, b.mod);
    return Residue{(a.value + a.mod - b.value) % a.mod, a.mod};
}

Residue mul(Residue a, Residue b) {
    check_same(a.mod, b.mod);
    return Residue{(a.value * b.value) % a.mod, a.mod};
}

Residue neg(Residue a) {
    return Residue{(a.mod - a.value) % a.mod, a.mod};
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t mod) {
    // extended Euclid over signed arithmetic; mod <= 2^31 keeps it exact
    std::int64_t r0 = static_cast<std::int64_t>(mod), r1 = static_cast<std::int64_t>(a % mod);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1)
        throw NotAUnitError(std::to_string(a) + " is not a unit mod " + std::to_string(mod));
    if (t0 < 0) t0 += static_cast<std::int64_t>(mod);
    return static_cast<std::uint64_t>(t0);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    a %= mod;
    while (e) {
        if (e & 1) r = (r * a) % mod;
        a = (a * a) % mod;
        e >>= 1;
    }
    return r;
}

Residue inv(Residue a) {
    return Residue{mod_inv(a.value, a.mod), a.mod};
}

Residue project(Residue a, std::uint64_t p) {
    return Residue{a.value % p, p};
}

bool is_unit(Residue a, std::uint64_t p) {
    return a.value % p != 0;
}

ZPoly::ZPoly(std::uint64_t mod, std::vector<std::uint64_t> coeffs) : mod_(mod) {
    check_mod(mod);
    for (auto& c : coeffs) c %= mod;
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    coeffs_ = std::move(coeffs);
}

ZPoly add(const ZPoly& f, const ZPoly& g) {
    check_same(f.mod(), g.mod());
    std::vector<std::uint64_t> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (f.coeff(i) + g.coeff(i)) % f.mod();
    return ZPoly(f.mod(), std::move(c));
}

ZPoly sub(const ZPoly& f, const ZPoly& g) {
    check_same(f.mod(), g.mod());
    std::vector<std::uint64_t> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (f.coeff(i) + f.mod() - g.coeff(i)) % f.mod();
    return ZPoly(f.mod(), std::move(c));
}

ZPoly mul(const ZPoly& f, const ZPoly& g) {
    check_same(f.mod(), g.mod());
    if (f.is_zero() || g.is_zero()) return ZPoly::zero(f.mod());
    std::vector<std::uint64_t> c(f.coeffs().size() + g.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            c[i + j] = (c[i + j] + f.coeffs()[i] * g.coeffs()[j]) % f.mod();
    return ZPoly(f.mod(), std::move(c));
}

ZPoly scale(const ZPoly& f, std::uint64_t c) {
    std::vector<std::uint64_t> out(f.coeffs());
    for (auto& v : out) v = (v * (c % f.mod())) % f.mod();
    return ZPoly(f.mod(), std::move(out));
}

std::pair<ZPoly, ZPoly> divmod(const ZPoly& f, const ZPoly& g) {
    check_same(f.mod(), g.mod());
    const std::uint64_t mod = f.mod();
    if (g.is_zero()) throw InvalidInputError("polynomial division by zero");
    std::uint64_t lead_inv;
    try {
        lead_inv = mod_inv(g.leading(), mod);
    } catch (const NotAUnitError&) {
        throw InvalidInputError("divisor leading coefficient is not a unit");
    }
    // normalize to a monic divisor: f = q'*(g/lead) + r with q = q'/lead
    ZPoly gm = scale(g, lead_inv);
    std::vector<std::uint64_t> rem(f.coeffs());
    int dg = gm.degree();
    std::vector<std::uint64_t> quot(
        f.degree() >= dg ? static_cast<std::size_t>(f.degree() - dg + 1) : 0, 0);
    for (int d = f.degree(); d >= dg; --d) {
        std::uint64_t c = rem[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(d - dg)] = c;
        for (int i = 0; i <= dg; ++i) {
            auto& r = rem[static_cast<std::size_t>(d - dg + i)];
            r = (r + mod - (c * gm.coeff(static_cast<std::size_t>(i))) % mod) % mod;
        }
    }
    ZPoly q = scale(ZPoly(mod, std::move(quot)), lead_inv);
    return {std::move(q), ZPoly(mod, std::move(rem))};
}

ZPoly project(const ZPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> c(f.coeffs());
    for (auto& v : c) v %= p;
    return ZPoly(p, std::move(c));
}

std::string to_string(const ZPoly& f, const char* var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        std::uint64_t c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i > 0) {
            if (c != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace grmds
