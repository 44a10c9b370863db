#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qaff {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;
using Rational = boost::rational<Int>;

Vec unit(int size, int i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(Int c, const Vec& a);
Vec neg(const Vec& a);
bool is_zero(const Vec& a);

// (a, b) with respect to the symmetric matrix form.
Int pairing(const Mat& form, const Vec& a, const Vec& b);

Int gcd_of(const Vec& a);
Vec primitive(const Vec& a);

// all nonzero coefficients positive (resp. negative)
bool nonneg(const Vec& a);

Mat transpose(const Mat& m);
Mat submatrix(const Mat& m, const std::vector<int>& idx);

// Gram-type matrix 2 (b_i,b_j)/(b_i,b_i); nullopt if some entry is fractional
// or some b_i is isotropic.
std::optional<Mat> cartan_of(const Mat& form, const std::vector<Vec>& roots);

// Basis of the rational null space of m, each vector scaled to a primitive
// integer vector.
std::vector<Vec> integer_kernel(const Mat& m);

// Any rational solution of rows * x = rhs.
std::optional<std::vector<Rational>> solve_rational(const Mat& rows, const Vec& rhs);

std::string to_string(const Vec& v);
std::string to_string(const Mat& m);

// "a0+2a1" (or with α); first_index is 1 for finite types.
std::string root_string(const Vec& v, int first_index = 0, bool ascii = true);

}  // namespace qaff
