#pragma once

#include "qaff/lattice.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qaff {

enum class Family { A, B, C, D, E, F, G };

// X_rank^(twist); twist 0 is a finite type. rank is the subscript exactly as
// written, so A_{2n-1}^{(2)} with n=3 is {A, 5, 2}.
struct TypeLabel {
    Family family = Family::A;
    int rank = 1;
    int twist = 0;

    bool affine() const { return twist != 0; }
    friend auto operator<=>(const TypeLabel&, const TypeLabel&) = default;
};

using TypeList = std::vector<TypeLabel>;

char family_char(Family f);
std::string to_string(const TypeLabel& t);  // "A5~2", "B3"
std::string to_string(const TypeList& ts);  // "A1~1 x A1~1", "{0}" if empty
std::string pretty(const TypeLabel& t);     // "A5^(2)"
std::optional<TypeLabel> parse_label(std::string_view s);

// Number of simple roots; 0 if the label has no meaning.
int datum_size(const TypeLabel& t);

struct CartanDatum {
    TypeLabel label;
    int size = 0;
    Mat cartan;
    Mat form;
    Vec marks;  // empty for finite types
    int a0 = 0;
    int k = 0;
    int s = 0;

    bool affine() const { return label.affine(); }
    int first_index() const { return affine() ? 0 : 1; }
    int n() const { return affine() ? size - 1 : size; }
    int a0k() const { return a0 * k; }
    Int pair(const Vec& a, const Vec& b) const { return pairing(form, a, b); }
    Int norm(const Vec& a) const { return pairing(form, a, a); }
    Vec simple(int i) const { return unit(size, i); }
    const Vec& delta() const { return marks; }
    std::string root(const Vec& v) const { return root_string(v, first_index()); }
};

bool in_catalog(const TypeLabel& t);
// Catalog labels plus finite C_2, which the finite table needs in its own
// numbering.
bool buildable(const TypeLabel& t);

// Throws std::invalid_argument for labels outside buildable().
CartanDatum build_datum(const TypeLabel& t);
// Memoized build_datum; safe to call from several threads.
const CartanDatum& datum(const TypeLabel& t);

struct CatalogEntry {
    Family family;
    int twist;
    std::string name;     // "D_{n+1}^(2)"
    std::string range;    // "n >= 2"
    int min_rank;         // smallest legal subscript
    int step;             // subscript step within the series, 0 for a single type
};
std::vector<CatalogEntry> catalog();

// Affine catalog labels with rank(bar Delta) in [1, max_n].
TypeList affine_labels(int max_n);
// Finite catalog labels with rank <= max_n.
TypeList finite_labels(int max_n);

struct Duality {
    TypeLabel dual;
    std::vector<int> perm;  // perm[i]: node of the dual matching node i
};
// Throws std::invalid_argument for finite labels.
Duality dual_datum(const TypeLabel& t);

// Resolves low-rank coincidences (D3 = A3, B2^(1) = C2^(1), A3^(2) = D3^(2),
// D2^(1) = A1^(1) x A1^(1), ...) and sorts.
TypeList canonical(const TypeList& ts);
TypeList canonical(const TypeLabel& t);
bool same_type(const TypeList& a, const TypeList& b);

struct Component {
    std::optional<TypeLabel> label;
    std::vector<int> nodes;  // nodes[j] = input index playing label node j
    Mat matrix;              // the component's submatrix in input order
};

struct Identification {
    std::vector<Component> components;
    bool recognized() const;
    TypeList labels() const;  // recognized components only
    std::string str() const;
};

Identification identify_type(const Mat& gcm);

}  // namespace qaff
