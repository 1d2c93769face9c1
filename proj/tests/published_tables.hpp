#ifndef VIZING_TESTS_PUBLISHED_TABLES_HPP
#define VIZING_TESTS_PUBLISHED_TABLES_HPP

// Published certificate data used as regression fixtures: the d=5 Gram matrix
// and the d=6..8 coefficient tables (radicand per row w, rational entries
// c_{w,i}/sqrt(radicand)). Every Gram entry below was recomputed exactly from
// the row data before being enshrined; the d=8 value c_{1,4} = -(8/105)sqrt7
// corrects an obvious misprint (-8/108 violates the k=4..8 equations, -8/105
// satisfies all of them and the even-d closed forms).

#include <vector>

#include "vizing/rat_matrix.hpp"

namespace viz_tables {

struct PublishedRow {
  viz::Rational radicand;
  std::vector<viz::Rational> coeffs;  // index i-1 holds c_{w,i} without the radical
};

inline viz::Rational qq(long n, long d = 1) { return viz::Rational(n, d); }

inline std::vector<PublishedRow> published_rows(int d) {
  using R = PublishedRow;
  switch (d) {
    case 6:
      return {R{qq(5), {qq(1), qq(-3, 5), qq(21, 100)}},
              R{qq(5), {qq(0), qq(1, 5), qq(-3, 25)}},
              R{qq(3), {qq(0), qq(0), qq(1, 20)}}};
    case 7:
      return {R{qq(7), {qq(1), qq(-5, 7), qq(9, 28), qq(-17, 245)}},
              R{qq(21), {qq(0), qq(1, 7), qq(-179, 1260), qq(109, 2205)}},
              R{qq(429), {qq(0), qq(0), qq(1, 90), qq(-53, 6435)}},
              R{qq(4147), {qq(0), qq(0), qq(0), qq(1, 5005)}}};
    case 8:
      return {R{qq(7), {qq(1), qq(-5, 7), qq(31, 98), qq(-8, 105)}},
              R{qq(21), {qq(0), qq(1, 7), qq(-41, 294), qq(16, 315)}},
              R{qq(15), {qq(0), qq(0), qq(1, 21), qq(-8, 225)}},
              R{qq(35), {qq(0), qq(0), qq(0), qq(2, 525)}}};
    default:
      throw std::invalid_argument("published_rows: only d = 6, 7, 8");
  }
}

inline viz::RatMatrix published_gram(int d) {
  if (d == 5) {
    viz::RatMatrix F(3, 3);
    F.at(0, 0) = qq(6);      F.at(0, 1) = qq(-4);     F.at(0, 2) = qq(59, 40);
    F.at(1, 0) = qq(-4);     F.at(1, 1) = qq(3);      F.at(1, 2) = qq(-5, 4);
    F.at(2, 0) = qq(59, 40); F.at(2, 1) = qq(-5, 4);  F.at(2, 2) = qq(3, 5);
    return F;
  }
  const auto rows = published_rows(d);
  const size_t m = rows.front().coeffs.size();
  viz::RatMatrix F(m, m);
  for (const auto& r : rows)
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j)
        F.at(i, j) += r.radicand * r.coeffs[i] * r.coeffs[j];
  return F;
}

}  // namespace viz_tables

#endif  // VIZING_TESTS_PUBLISHED_TABLES_HPP
