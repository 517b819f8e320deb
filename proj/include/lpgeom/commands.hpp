#pragma once

#include "lpgeom/report_io.hpp"
#include "lpgeom/rep.hpp"

#include <string>
#include <string_view>
#include <vector>

/// One function per command-line verification. Each returns a report whose
/// checks decide the verdict; computed values go to `results`.
namespace lpg::commands {

/// Function of x1..xn on the chart "base<n>". n = 0 takes the largest xk
/// that occurs (at least 1).
Expression parse_function(std::string_view text, unsigned n = 0);

/// "[e1, e2]" or "e1, e2" on `chart`; "identity" gives the chart variables.
std::vector<Expression> parse_vector(std::string_view text, const ChartPtr& chart);

/// Comma list of rationals, brackets optional.
std::vector<Rational> parse_point(std::string_view text);

io::VerificationReport frobenius(const jets::PathSystem& system);

/// Osculating quadric at x0 (the origin when empty), plus a 2-jet match check.
io::VerificationReport osculate(const Expression& f, const std::vector<Rational>& x0);

/// Osculating family of f, checked against the null-vector and symmetric
/// differential conditions with X = the parameters.
io::VerificationReport family(const Expression& f);

io::VerificationReport nullcheck(const quadric::QuadricFamily& family, const std::vector<Expression>& X);
io::VerificationReport symdiff(const quadric::QuadricFamily& family);
io::VerificationReport developable(const quadric::QuadricFamily& family, const std::vector<Expression>& V);

/// Chart identity, contact nondegeneracy and generic incidence at n.
io::VerificationReport flat_verify(unsigned n);

io::VerificationReport lagrangian(const quadric::QuadricFamily& quadric);
io::VerificationReport lagrangian(const io::PlaneProblem& plane);

io::VerificationReport curvature(const cartan::SpForm& phi);
io::VerificationReport curvature(const io::BlocksProblem& blocks);
io::VerificationReport maurer_cartan(const io::MatrixProblem& g);
io::VerificationReport identities(const io::BlocksProblem& blocks);

io::VerificationReport normalize_torsion(const torsion::TorsionTensor& T);
io::VerificationReport normalize_p(const torsion::PTensor& P);

/// Weyl dimensions of the fundamental sp(n) representations, or of `label`
/// ("2,1") when given.
io::VerificationReport rep_dims(unsigned n, std::string_view label = {});
/// Tensor product of two sp(n) labels, with the dimension ledger.
io::VerificationReport rep_decompose(unsigned n, std::string_view a, std::string_view b);
/// Stated decompositions plus the V-piece projector checks.
io::VerificationReport rep_verify(unsigned n, std::uint64_t seed);
io::VerificationReport lemma_audit(unsigned n);

} // namespace lpg::commands
