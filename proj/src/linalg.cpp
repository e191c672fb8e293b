#include "qcsa/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace qcsa {

Vec Vec::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](Term const& a, Term const& b) { return a.key < b.key; });
  Vec v;
  for (auto& t : terms) {
    if (!v.t_.empty() && v.t_.back().key == t.key)
      v.t_.back().coef += t.coef;
    else
      v.t_.push_back(std::move(t));
  }
  std::erase_if(v.t_, [](Term const& t) { return t.coef.is_zero(); });
  return v;
}

Vec Vec::unit(int key, CycScalar coef) {
  Vec v;
  if (!coef.is_zero()) v.t_.push_back({key, std::move(coef)});
  return v;
}

CycScalar Vec::at(int key) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), key,
                             [](Term const& t, int k) { return t.key < k; });
  if (it == t_.end() || it->key != key) return CycScalar(0);
  return it->coef;
}

Vec Vec::axpy(Vec const& a, CycScalar const& s, Vec const& b) {
  if (s.is_zero() || b.is_zero()) return a;
  Vec r;
  r.t_.reserve(a.t_.size() + b.t_.size());
  auto i = a.t_.begin(), j = b.t_.begin();
  while (i != a.t_.end() || j != b.t_.end()) {
    if (j == b.t_.end() || (i != a.t_.end() && i->key < j->key)) {
      r.t_.push_back(*i++);
    } else if (i == a.t_.end() || j->key < i->key) {
      r.t_.push_back({j->key, s * j->coef});
      ++j;
    } else {
      CycScalar c = i->coef + s * j->coef;
      if (!c.is_zero()) r.t_.push_back({i->key, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

Vec operator+(Vec const& a, Vec const& b) { return Vec::axpy(a, CycScalar(1), b); }
Vec operator-(Vec const& a, Vec const& b) { return Vec::axpy(a, CycScalar(-1), b); }

Vec operator*(CycScalar const& s, Vec const& a) {
  Vec r;
  if (s.is_zero()) return r;
  r.t_.reserve(a.t_.size());
  for (auto const& t : a.t_) r.t_.push_back({t.key, s * t.coef});
  return r;
}

Vec Vec::operator-() const { return CycScalar(-1) * *this; }

bool operator==(Vec const& a, Vec const& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i].key != b.t_[i].key || a.t_[i].coef != b.t_[i].coef) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, Vec const& v) {
  if (v.is_zero()) return os << "0";
  bool first = true;
  for (auto const& t : v) {
    os << (first ? "" : " + ") << "(" << t.coef << ")*[" << t.key << "]";
    first = false;
  }
  return os;
}

void Accumulator::add(int key, CycScalar const& c) {
  if (c.is_zero()) return;
  if (!mark_[key]) {
    mark_[key] = 1;
    touched_.push_back(key);
    val_[key] = c;
  } else {
    val_[key] += c;
  }
}

void Accumulator::add(Vec const& v, CycScalar const& s) {
  for (auto const& t : v) add(t.key, s * t.coef);
}

Vec Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  std::vector<Term> out;
  out.reserve(touched_.size());
  for (int k : touched_) {
    if (!val_[k].is_zero()) out.push_back({k, std::move(val_[k])});
    val_[k] = CycScalar();
    mark_[k] = 0;
  }
  touched_.clear();
  return Vec::from_terms(std::move(out));
}

Priority identity_priority(int space) {
  auto p = std::make_shared<std::vector<int>>(space);
  std::iota(p->begin(), p->end(), 0);
  return p;
}

Echelon::Echelon(int space, Priority priority)
    : space_(space), prio_(std::move(priority)), pivot_row_(space, -1) {}

int Echelon::pivot_of(Vec const& v) const {
  int best = -1;
  for (auto const& t : v)
    if (best < 0 || (*prio_)[t.key] > (*prio_)[best]) best = t.key;
  return best;
}

Vec Echelon::reduce(Vec const& v) const {
  bool hit = false;
  for (auto const& t : v)
    if (pivot_row_[t.key] >= 0) {
      hit = true;
      break;
    }
  if (!hit) return v;
  // Rows are fully reduced, so each pivot entry of v is touched only by its own row.
  std::vector<std::pair<int, CycScalar>> todo;
  for (auto const& t : v)
    if (pivot_row_[t.key] >= 0) todo.push_back({pivot_row_[t.key], t.coef});
  if (todo.size() <= 2) {
    Vec r = v;
    for (auto const& [row, c] : todo) r = Vec::axpy(r, -c, rows_[row]);
    return r;
  }
  Accumulator acc(space_);
  acc.add(v, CycScalar(1));
  for (auto const& [row, c] : todo) acc.add(rows_[row], -c);
  return acc.take();
}

Vec Echelon::insert(Vec const& v) {
  Vec w = reduce(v);
  if (w.is_zero()) return w;
  int p = pivot_of(w);
  w = w.at(p).inverse() * w;
  for (auto& row : rows_) {
    CycScalar c = row.at(p);
    if (!c.is_zero()) row = Vec::axpy(row, -c, w);
  }
  pivot_row_[p] = static_cast<int>(rows_.size());
  pivots_.push_back(p);
  rows_.push_back(w);
  return w;
}

std::vector<Vec> Echelon::rows() const {
  std::vector<int> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return (*prio_)[pivots_[a]] < (*prio_)[pivots_[b]]; });
  std::vector<Vec> out;
  out.reserve(order.size());
  for (int i : order) out.push_back(rows_[i]);
  return out;
}

bool Echelon::same_span(Echelon const& other) const {
  if (rank() != other.rank()) return false;
  for (auto const& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

namespace {

Vec shifted(Vec const& v, int offset) {
  std::vector<Term> t;
  t.reserve(v.size());
  for (auto const& x : v) t.push_back({x.key + offset, x.coef});
  return Vec::from_terms(std::move(t));
}

}  // namespace

std::vector<Vec> kernel(std::vector<Vec> const& cols, int space) {
  int n = static_cast<int>(cols.size());
  // Tracking columns sit below every real coordinate in priority.
  auto prio = std::make_shared<std::vector<int>>(space + n);
  for (int i = 0; i < space; ++i) (*prio)[i] = n + i;
  for (int j = 0; j < n; ++j) (*prio)[space + j] = j;
  Echelon e(space + n, prio);
  for (int j = 0; j < n; ++j) e.insert(cols[j] + Vec::unit(space + j));
  std::vector<Vec> out;
  for (auto const& row : e.rows()) {
    if (e.pivot_of(row) < space) continue;
    out.push_back(shifted(row, -space));
  }
  return out;
}

std::vector<Vec> intersect(std::vector<Vec> const& a, std::vector<Vec> const& b, int space) {
  auto prio = std::make_shared<std::vector<int>>(2 * space);
  for (int i = 0; i < space; ++i) {
    (*prio)[i] = space + i;
    (*prio)[space + i] = i;
  }
  Echelon e(2 * space, prio);
  for (auto const& v : a) e.insert(v + shifted(v, space));
  for (auto const& v : b) e.insert(v);
  std::vector<Vec> out;
  for (auto const& row : e.rows())
    if (e.pivot_of(row) >= space) out.push_back(shifted(row, -space));
  return out;
}

int rank_of(std::vector<Vec> const& vs, int space) {
  Echelon e(space);
  for (auto const& v : vs) e.insert(v);
  return e.rank();
}

int rref(Matrix& m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    CycScalar inv = m[r][c].inverse();
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      CycScalar f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace qcsa
