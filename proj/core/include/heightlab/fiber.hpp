#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "heightlab/orbit.hpp"

namespace heightlab {

enum class KodairaType {
    In,       // I_nu, nu >= 1 (multiplicative)
    II,
    III,
    IV,
    InStar,   // I*_nu, nu >= 0
    IVStar,
    IIIStar,
    IIStar,
};

/// Which component of the singular fiber the section passes through.
enum class ComponentKind {
    Identity,
    Multiplicative,  // I_nu component a, 0 <= a <= nu/2
    NonIdentity,     // III, IV, IV*, III*
    Distinguished,   // I*_nu (nu > 0): the order-2 component nearest the identity
    Far,             // I*_nu: non-distinguished, non-identity
};

/// A singular fiber together with the component met by the point.
struct FiberClass {
    KodairaType type = KodairaType::In;
    int nu = 1;           // parameter of I_nu / I*_nu; ignored otherwise
    ComponentKind component = ComponentKind::Identity;
    int index = 0;        // multiplicative component index

    FiberClass() = default;
    FiberClass(KodairaType t, int nu_, ComponentKind c, int index_ = 0);

    static FiberClass multiplicative(int nu, int index) {
        return FiberClass(KodairaType::In, nu,
                          index == 0 ? ComponentKind::Identity : ComponentKind::Multiplicative,
                          index);
    }
};

/// Local discriminant degree d_v.
int fiber_degree(KodairaType t, int nu);
/// Local conductor degree N_v.
int fiber_conductor(KodairaType t, int nu);

/// "I5", "I0*", "IV*", "II", ... and the inverse.
std::string kodaira_symbol(KodairaType t, int nu);
std::pair<KodairaType, int> parse_kodaira_symbol(std::string_view s);

/// Translates fiber/component data into a positive element of G whose
/// lambda_m, d and N images reproduce the local height corrections,
/// the local discriminant degree, and a conductor upper bound.
Gamma fiber_to_gamma(const FiberClass& f);

/// Local height correction lambda_v(mP) read off the component of mP,
/// which is the image of m * c_v in the component group. m >= 1.
Rational local_lambda(const FiberClass& f, long m);

/// True when N(fiber_to_gamma(f)) equals N_v exactly: multiplicative
/// with gcd(a, nu) = 1, III/IV on a non-identity component, or II.
bool conductor_tight(const FiberClass& f);

/// All legal component choices for a fiber of the given type.
std::vector<FiberClass> legal_components(KodairaType t, int nu);

}  // namespace heightlab
