#pragma once

#include <memory>
#include <vector>

#include "eisp/period_poly.hpp"

namespace eisp {

// One PeriodPoly per coset of Gamma(N) in SL2(Z), indexed like CosetTable.
using CosetPoly = std::vector<PeriodPoly>;

struct InducedCochain {
  int k = 0;
  ResiduePair lambda;
  std::shared_ptr<const CosetTable> cosets;
  CosetPoly at_T;
  CosetPoly at_S;

  int level() const { return lambda.N; }
};

// F per coset; constant polynomials.
struct CoboundaryData {
  int k = 0;
  ResiduePair lambda;
  std::vector<ExtScalar> values;
};

struct RationalityFailure {
  char generator;  // 'T' or 'S'
  int coset;
  int coeff;
};

struct RationalityReport {
  bool rational = true;
  std::vector<RationalityFailure> failures;
};

// Shared per-level coset tables.
std::shared_ptr<const CosetTable> coset_table(int N);

PeriodPoly period_T(int k, const ResiduePair& lambda);
PeriodPoly period_S(int k, const ResiduePair& lambda);

InducedCochain build_induced(int k, const ResiduePair& lambda);
CoboundaryData coboundary(int k, const ResiduePair& lambda);

// (F|g)(s) = F(s g^{-1})|g
CosetPoly act(const CosetTable& t, const CosetPoly& F, const Mat2& g);

std::pair<InducedCochain, RationalityReport> modify_and_certify(const InducedCochain& c, const CoboundaryData& F);
RationalityReport certify(const InducedCochain& c);

CosetPoly evaluate_word(const InducedCochain& c, const CompactWord& w);
CosetPoly evaluate_cocycle(const InducedCochain& c, const Mat2& g);
bool verify_relations(const InducedCochain& c);

PeriodPoly shapiro_descend(const InducedCochain& c, const Mat2& g);

// f_inf/(k-1) ((X+n)^{k-1} - X^{k-1}) with f_inf = -B_k(lambda1/N)/k!
PeriodPoly parabolic_closed_form(int k, const ResiduePair& lambda, long n);

}  // namespace eisp
