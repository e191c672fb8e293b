// Sparse vectors over CycScalar and exact echelon forms.
#pragma once

#include <memory>
#include <vector>

#include "qcsa/cyclofield.hpp"

namespace qcsa {

struct Term {
  int key;
  CycScalar coef;
};

// Sorted by key, no zero coefficients.
class Vec {
 public:
  Vec() = default;
  static Vec from_terms(std::vector<Term> terms);
  static Vec unit(int key, CycScalar coef = CycScalar(1));

  std::vector<Term> const& terms() const { return t_; }
  auto begin() const { return t_.begin(); }
  auto end() const { return t_.end(); }
  int size() const { return static_cast<int>(t_.size()); }
  bool is_zero() const { return t_.empty(); }
  CycScalar at(int key) const;
  int max_key() const { return t_.empty() ? -1 : t_.back().key; }

  friend Vec operator+(Vec const& a, Vec const& b);
  friend Vec operator-(Vec const& a, Vec const& b);
  friend Vec operator*(CycScalar const& s, Vec const& a);
  Vec operator-() const;
  Vec& operator+=(Vec const& b) { return *this = *this + b; }
  Vec& operator-=(Vec const& b) { return *this = *this - b; }
  friend bool operator==(Vec const& a, Vec const& b);
  friend bool operator!=(Vec const& a, Vec const& b) { return !(a == b); }

  // a + s*b
  static Vec axpy(Vec const& a, CycScalar const& s, Vec const& b);

 private:
  std::vector<Term> t_;
};

std::ostream& operator<<(std::ostream& os, Vec const& v);

// Dense scratch for accumulating many terms.
class Accumulator {
 public:
  explicit Accumulator(int space) : val_(space), mark_(space, 0) {}
  void add(int key, CycScalar const& c);
  void add(Vec const& v, CycScalar const& s);
  CycScalar const& get(int key) const { return val_[key]; }
  Vec take();

 private:
  std::vector<CycScalar> val_;
  std::vector<char> mark_;
  std::vector<int> touched_;
};

using Priority = std::shared_ptr<std::vector<int> const>;
Priority identity_priority(int space);

// Reduced echelon basis. The pivot of a row is its key of largest priority;
// pivots are 1 and no other row has a nonzero entry in a pivot column.
class Echelon {
 public:
  Echelon(int space, Priority priority);
  explicit Echelon(int space) : Echelon(space, identity_priority(space)) {}

  int space() const { return space_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  Priority const& priority() const { return prio_; }
  int pivot_of(Vec const& v) const;

  Vec reduce(Vec const& v) const;
  bool contains(Vec const& v) const { return reduce(v).is_zero(); }
  // Returns the reduced, normalized vector that was added, or zero.
  Vec insert(Vec const& v);
  // Rows ordered by increasing pivot priority.
  std::vector<Vec> rows() const;
  bool same_span(Echelon const& other) const;

 private:
  int space_;
  Priority prio_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
  std::vector<int> pivot_row_;
};

// Basis of {t : sum_j t_j cols[j] = 0}; cols live in a space of the given size.
std::vector<Vec> kernel(std::vector<Vec> const& cols, int space);
std::vector<Vec> intersect(std::vector<Vec> const& a, std::vector<Vec> const& b, int space);
int rank_of(std::vector<Vec> const& vs, int space);

using Matrix = std::vector<std::vector<CycScalar>>;
// In-place reduced row echelon form with leftmost pivots; returns the rank.
int rref(Matrix& m);

}  // namespace qcsa
