#ifndef GAMMALAB_DESCRIPTOR_HPP
#define GAMMALAB_DESCRIPTOR_HPP

#include "gammalab/abelian.hpp"
#include "gammalab/intpoly.hpp"

#include <optional>
#include <string>

namespace gammalab {

/* A parsed field descriptor. Three syntaxes:
 *   named shortcuts: Q, sqrt<d>, zeta<n>, cyclic(q,p)
 *   abelian canonical form: m=<conductor>;H=<residues>
 *   raw polynomial, constant term first: poly=c0,c1,...
 * Named and canonical forms produce an abelian field; poly= stays generic.
 */
struct FieldDescriptor {
    std::string text;
    std::optional<AbelianField> abelian;
    std::optional<IntPoly> poly;
    bool is_abelian() const { return abelian.has_value(); }
};

FieldDescriptor parse_descriptor(const std::string& text);

} // namespace gammalab

#endif
