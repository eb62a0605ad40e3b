#include "heightlab/fiber.hpp"

#include <numeric>
#include <stdexcept>

namespace heightlab {

namespace {

[[noreturn]] void illegal(const char* what) {
    throw std::domain_error(std::string("FiberClass: ") + what);
}

}  // namespace

FiberClass::FiberClass(KodairaType t, int nu_, ComponentKind c, int index_)
    : type(t), nu(nu_), component(c), index(index_) {
    switch (t) {
        case KodairaType::In:
            if (nu < 1) illegal("I_nu requires nu >= 1");
            if (c == ComponentKind::Identity) {
                if (index != 0) illegal("identity component has index 0");
            } else if (c == ComponentKind::Multiplicative) {
                if (index < 0 || 2 * index > nu) illegal("I_nu index must satisfy 0 <= a <= nu/2");
            } else {
                illegal("I_nu admits identity or multiplicative components only");
            }
            return;
        case KodairaType::II:
        case KodairaType::IIStar:
            if (c != ComponentKind::Identity) illegal("component group is trivial");
            return;
        case KodairaType::III:
        case KodairaType::IV:
        case KodairaType::IVStar:
        case KodairaType::IIIStar:
            if (c != ComponentKind::Identity && c != ComponentKind::NonIdentity)
                illegal("expected identity or non-identity component");
            return;
        case KodairaType::InStar:
            if (nu < 0) illegal("I*_nu requires nu >= 0");
            if (c == ComponentKind::Distinguished && nu == 0)
                illegal("I*_0 has no distinguished component");
            if (c != ComponentKind::Identity && c != ComponentKind::Distinguished &&
                c != ComponentKind::Far)
                illegal("expected identity, distinguished or far component");
            return;
    }
    illegal("unknown Kodaira type");
}

int fiber_degree(KodairaType t, int nu) {
    switch (t) {
        case KodairaType::In: return nu;
        case KodairaType::II: return 2;
        case KodairaType::III: return 3;
        case KodairaType::IV: return 4;
        case KodairaType::InStar: return 6 + nu;
        case KodairaType::IVStar: return 8;
        case KodairaType::IIIStar: return 9;
        case KodairaType::IIStar: return 10;
    }
    throw std::logic_error("fiber_degree: unreachable");
}

int fiber_conductor(KodairaType t, int) {
    return t == KodairaType::In ? 1 : 2;
}

std::string kodaira_symbol(KodairaType t, int nu) {
    switch (t) {
        case KodairaType::In: return "I" + std::to_string(nu);
        case KodairaType::II: return "II";
        case KodairaType::III: return "III";
        case KodairaType::IV: return "IV";
        case KodairaType::InStar: return "I" + std::to_string(nu) + "*";
        case KodairaType::IVStar: return "IV*";
        case KodairaType::IIIStar: return "III*";
        case KodairaType::IIStar: return "II*";
    }
    throw std::logic_error("kodaira_symbol: unreachable");
}

std::pair<KodairaType, int> parse_kodaira_symbol(std::string_view s) {
    const bool star = !s.empty() && s.back() == '*';
    std::string_view base = star ? s.substr(0, s.size() - 1) : s;
    if (base == "II") return {star ? KodairaType::IIStar : KodairaType::II, 0};
    if (base == "III") return {star ? KodairaType::IIIStar : KodairaType::III, 0};
    if (base == "IV") return {star ? KodairaType::IVStar : KodairaType::IV, 0};
    if (!base.empty() && base.front() == 'I') {
        int nu = 0;
        bool any = false;
        for (char c : base.substr(1)) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad Kodaira symbol");
            nu = 10 * nu + (c - '0');
            any = true;
        }
        if (any) return {star ? KodairaType::InStar : KodairaType::In, nu};
    }
    throw std::invalid_argument("bad Kodaira symbol: " + std::string(s));
}

Gamma fiber_to_gamma(const FiberClass& f) {
    Gamma g;
    const OrbitGenerator zero;
    const OrbitGenerator half(1, 2);

    if (f.component == ComponentKind::Identity) {
        g.add(zero, fiber_degree(f.type, f.nu));
        return g;
    }

    switch (f.type) {
        case KodairaType::In: {
            // gcd(a, nu) copies of the reduced orbit [a/nu].
            const long a = f.index, nu = f.nu;
            const long k = std::gcd(a, nu);
            g.add(OrbitGenerator(Int(a / k), Int(nu / k)), k);
            return g;
        }
        case KodairaType::III:
            g.add(half);
            g.add(zero);
            return g;
        case KodairaType::IV:
            g.add(OrbitGenerator(1, 3));
            g.add(zero);
            return g;
        case KodairaType::IVStar:
            g.add(OrbitGenerator(1, 3), 2);
            g.add(zero, 2);
            return g;
        case KodairaType::IIIStar:
            g.add(half, 3);
            g.add(zero, 3);
            return g;
        case KodairaType::InStar: {
            if (f.component == ComponentKind::Distinguished) {
                g.add(half, 2);
                g.add(zero, f.nu + 2);
                return g;
            }
            // Far component: nu = 2*mu or 2*mu + 1.
            const int mu = f.nu / 2;
            if (f.nu % 2 == 0) {
                g.add(half, mu + 2);
                g.add(zero, 2);
            } else {
                g.add(OrbitGenerator(1, 4));
                g.add(half, mu + 1);
                g.add(zero);
            }
            return g;
        }
        default:
            throw std::logic_error("fiber_to_gamma: non-identity component on trivial group");
    }
}

Rational local_lambda(const FiberClass& f, long m) {
    if (m < 1) throw std::domain_error("local_lambda: m must be >= 1");
    const int dv = fiber_degree(f.type, f.nu);
    const Rational identity_value(dv, 6);

    if (f.component == ComponentKind::Identity) return identity_value;

    switch (f.type) {
        case KodairaType::In: {
            // Component of mP is m*a in Z/nu; lambda = nu * B(m*a/nu).
            long r = (m % f.nu) * f.index % f.nu;
            return Rational(f.nu) * bernoulli2(Rational(r, f.nu));
        }
        case KodairaType::III:
        case KodairaType::IIIStar:
            return m % 2 == 0 ? identity_value : Rational(0);
        case KodairaType::IV:
        case KodairaType::IVStar:
            return m % 3 == 0 ? identity_value : Rational(0);
        case KodairaType::InStar: {
            if (f.component == ComponentKind::Distinguished)
                return m % 2 == 0 ? identity_value : Rational(f.nu, 6);
            if (f.nu % 2 == 0)
                return m % 2 == 0 ? identity_value : Rational(-f.nu, 12);
            // Odd nu: component group is cyclic of order 4, generated by c_v.
            switch (m % 4) {
                case 0: return identity_value;
                case 2: return Rational(f.nu, 6);
                default: return Rational(-f.nu, 12);
            }
        }
        default:
            throw std::logic_error("local_lambda: non-identity component on trivial group");
    }
}

bool conductor_tight(const FiberClass& f) {
    if (f.type == KodairaType::In)
        return f.component == ComponentKind::Identity ? f.nu == 1
                                                      : std::gcd(f.index, f.nu) == 1;
    if (f.type == KodairaType::II) return true;
    if (f.type == KodairaType::III || f.type == KodairaType::IV)
        return f.component == ComponentKind::NonIdentity;
    return false;
}

std::vector<FiberClass> legal_components(KodairaType t, int nu) {
    std::vector<FiberClass> out;
    switch (t) {
        case KodairaType::In:
            for (int a = 0; 2 * a <= nu; ++a) out.push_back(FiberClass::multiplicative(nu, a));
            return out;
        case KodairaType::II:
        case KodairaType::IIStar:
            out.emplace_back(t, nu, ComponentKind::Identity);
            return out;
        case KodairaType::III:
        case KodairaType::IV:
        case KodairaType::IVStar:
        case KodairaType::IIIStar:
            out.emplace_back(t, nu, ComponentKind::Identity);
            out.emplace_back(t, nu, ComponentKind::NonIdentity);
            return out;
        case KodairaType::InStar:
            out.emplace_back(t, nu, ComponentKind::Identity);
            if (nu > 0) out.emplace_back(t, nu, ComponentKind::Distinguished);
            out.emplace_back(t, nu, ComponentKind::Far);
            return out;
    }
    throw std::logic_error("legal_components: unreachable");
}

}  // namespace heightlab
