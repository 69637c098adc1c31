#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liegeom/homogeneous.hpp"
#include "liegeom/lie_algebra.hpp"
#include "liegeom/quadratic_form.hpp"

namespace liegeom {

/// One asserted property, compared as a canonical string.
struct Expected {
    std::string property;
    std::string value;
};

/// Property keys understood by evaluate_property.
const std::vector<std::string>& known_properties();

struct CatalogEntry {
    std::string id;
    LieAlgebra algebra;
    std::optional<QuadraticForm> form;      ///< left-invariant metric on the algebra itself
    std::optional<HomogeneousModel> model;  ///< G/I model with a form on the complement
    std::vector<Expected> expected;

    const std::string* expected_value(const std::string& property) const;
};

std::vector<CatalogEntry> build_catalog();
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, const std::string& id);

/// Computes a property of an entry in its canonical string form. Throws when
/// the property does not apply (e.g. curvature without a form).
std::string evaluate_property(const CatalogEntry& entry, const std::string& property);

/// Standard algebras.
LieAlgebra abelian_c3();
LieAlgebra heis3();            ///< (X', Y, Z), [Y,Z] = X'
LieAlgebra sol3();             ///< (Y, Z, T), [Y,Z] = Z, [Y,T] = -T
LieAlgebra sl2();              ///< (H, E, F)
LieAlgebra c_plus_sl2();       ///< (C, H, E, F), C central

/// The three 4-dimensional tables with isotropy Y, on the basis (X', Y, Z, T).
enum class SolvableCase { C_TIMES_SOL = 1, C_SEMIDIRECT_HEIS = 2, C2_SEMIDIRECT_C2 = 3 };
LieAlgebra solvable_model_algebra(SolvableCase c);
HomogeneousModel solvable_model(SolvableCase c);

struct ParamExtension {
    GaussianRational c, m, k, beta;
};

/// Basis (X', Y, Z, T): [Y,Z] = X', [T,X'] = cX', [T,Z] = mX' + (c+beta)Z + kY, [T,Y] = Z - beta Y.
LieAlgebra build_param_extension(const ParamExtension& p);
/// Model with isotropy Y and the unipotent-adapted form on (X', Z, T).
HomogeneousModel param_extension_model(const ParamExtension& p);

/// Requires c = 0 and k = -beta^2 (PreconditionViolated otherwise). True iff
/// span{X', Z - beta Y, T} is a 3-dimensional subalgebra classifying as HEIS
/// with center spanned by X'.
bool check_prop_iv(const ParamExtension& p);

}  // namespace liegeom
