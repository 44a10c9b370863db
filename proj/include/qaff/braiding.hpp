#pragma once

#include "qaff/root_datum.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qaff {

// q^e for q of order ell.
struct UnityExp {
    int ell = 1;
    Int e = 0;

    UnityExp() = default;
    UnityExp(int ell_, Int e_);
    bool is_one() const { return e == 0; }
    int order() const;
    UnityExp operator*(const UnityExp& o) const { return {ell, e + o.e}; }
    UnityExp pow(Int k) const { return {ell, e * k}; }
    friend bool operator==(const UnityExp&, const UnityExp&) = default;
};

Int mod(Int a, Int m);

int ell_alpha(int ell, Int norm);

struct BraidingMat {
    int ell = 1;
    std::vector<Vec> degrees;
    Mat exps;  // residues in [0, ell)

    int size() const { return static_cast<int>(exps.size()); }
    UnityExp at(int i, int j) const { return {ell, exps[i][j]}; }
};

BraidingMat braiding_matrix(const CartanDatum& d, const std::vector<Vec>& degrees, int ell);

struct GcmResult {
    bool ok = false;
    Mat gcm;
    std::string error;
};

GcmResult heckenberger_gcm(const BraidingMat& b);

// Block-diagonal form of the product type.
Mat product_form(const TypeList& ts);

struct StandardForm {
    int u = 1;
    std::vector<int> perm;  // perm[j] = degree index for node j of the candidate
};

// Least u (searching 1..ell-1, then 0) with exps[perm i][perm j] = u*(b_i,b_j)
// for the candidate's form.
std::optional<StandardForm> standard_braiding_parameter(const BraidingMat& b, const TypeList& candidate);

struct LusztigResult {
    bool condA = true;
    std::vector<std::pair<int, int>> violations;  // (i, j) with l_i < -a_ij + 1
    bool condB = true;
};

// Condition a) for an arbitrary GCM and per-node l_alpha values.
LusztigResult lusztig_condition(const Mat& gcm, const std::vector<int>& l_alpha);
LusztigResult lusztig_condition(const CartanDatum& d, int ell);

bool commutator_primitive(int ell, const Vec& alpha, const Vec& beta, const CartanDatum& d);

// Display strings as printed in the tables: "1", "-1", "q^2", "qb^-1", "(-q)^-1".
std::optional<Int> parse_unity(const std::string& s, int ell);
std::string unity_string(const UnityExp& x);

}  // namespace qaff
