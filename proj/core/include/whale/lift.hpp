#pragma once

#include "whale/rel.hpp"

namespace whale {

/// Degreewise matrix of a DGL map: source degree-n basis to target degree-n
/// coordinates.
SparseMatrix map_matrix(const DglMap& f, int degree);

/// Checks that phi is a surjective quasi-isomorphism degreewise: surjective
/// in degrees 1..cap, homology isomorphism in degrees 1..cap-1. Returns
/// violations with degrees.
std::vector<std::string> validate_surjective_quasi_iso(const DglMap& phi,
                                                       int cap);

struct LiftResult {
  PsiDerivation theta;         // over psi, a D_psi-cycle
  PsiDerivation theta_second;  // over phi o psi, degree +1
};

/// Given a D-cycle theta' over phi o psi with phi a surjective quasi-iso,
/// produce theta over psi and theta'' with
///   D_psi(theta) = 0  and  phi o theta = theta' + D(theta'').
/// Induction over the source generators in nondecreasing degree; the source
/// must be minimal and finitely generated. Throws QuasiIsoViolation when a
/// solve fails, CapTooLow when the needed degrees exceed cap.
LiftResult lift_through_quasi_iso(const PsiDerivation& theta_prime,
                                  const DglMapPtr& psi, const DglMapPtr& phi,
                                  int cap);

/// Push a Rel(ad_psi) element along phi: (chi, theta) -> (phi chi, phi o theta).
RelElement push_rel_element(const DglMapPtr& phi, const DglMapPtr& composed,
                            const RelElement& z);

}  // namespace whale
