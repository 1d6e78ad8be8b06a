#include "mesacurve/monoid.hpp"

#include <sstream>

#include "mesacurve/errors.hpp"

namespace mesacurve {
namespace {

void require_same_rank(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    std::ostringstream msg;
    msg << op << ": rank mismatch (" << a << " vs " << b << ")";
    throw Error(ErrorCode::RankMismatch, msg.str());
  }
}

std::strong_ordering compare_coords(const std::vector<Integer>& a,
                                    const std::vector<Integer>& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (b[i] < a[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

template <typename Coords>
std::string coords_to_string(const Coords& coords) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out << ',';
    out << coords[i];
  }
  out << ')';
  return out.str();
}

std::vector<Integer> project(const std::vector<Integer>& coords,
                             const Face& face) {
  validate_face(face, coords.size());
  std::vector<Integer> out;
  out.reserve(coords.size() - face.killed.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!face.killed.count(i)) out.push_back(coords[i]);
  }
  return out;
}

}  // namespace

MonoidElement::MonoidElement(std::vector<Integer> coords)
    : coords_(std::move(coords)) {
  for (const auto& c : coords_) {
    if (c < 0) {
      throw Error(ErrorCode::SchemaError,
                  "monoid element with negative coordinate");
    }
  }
}

MonoidElement::MonoidElement(std::initializer_list<long> coords)
    : MonoidElement(std::vector<Integer>(coords.begin(), coords.end())) {}

MonoidElement MonoidElement::zero(std::size_t rank) {
  return MonoidElement(std::vector<Integer>(rank, Integer(0)));
}

MonoidElement MonoidElement::generator(std::size_t rank, std::size_t index) {
  std::vector<Integer> c(rank, Integer(0));
  c.at(index) = 1;
  return MonoidElement(std::move(c));
}

bool MonoidElement::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

std::set<std::size_t> MonoidElement::support() const {
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] != 0) s.insert(i);
  }
  return s;
}

GroupElement MonoidElement::to_group() const { return GroupElement(coords_); }

std::strong_ordering MonoidElement::operator<=>(
    const MonoidElement& other) const {
  return compare_coords(coords_, other.coords_);
}

GroupElement::GroupElement(std::vector<Integer> coords)
    : coords_(std::move(coords)) {}

GroupElement::GroupElement(std::initializer_list<long> coords)
    : coords_(coords.begin(), coords.end()) {}

GroupElement GroupElement::zero(std::size_t rank) {
  return GroupElement(std::vector<Integer>(rank, Integer(0)));
}

bool GroupElement::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool GroupElement::is_nonnegative() const {
  for (const auto& c : coords_) {
    if (c < 0) return false;
  }
  return true;
}

std::optional<MonoidElement> GroupElement::to_monoid() const {
  if (!is_nonnegative()) return std::nullopt;
  return MonoidElement(coords_);
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  require_same_rank(rank(), other.rank(), "group add");
  std::vector<Integer> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return GroupElement(std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& other) const {
  require_same_rank(rank(), other.rank(), "group subtract");
  std::vector<Integer> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coords_[i];
  return GroupElement(std::move(c));
}

GroupElement GroupElement::operator-() const {
  std::vector<Integer> c(coords_);
  for (auto& x : c) x = -x;
  return GroupElement(std::move(c));
}

GroupElement GroupElement::scaled(const Integer& m) const {
  std::vector<Integer> c(coords_);
  for (auto& x : c) x *= m;
  return GroupElement(std::move(c));
}

std::strong_ordering GroupElement::operator<=>(const GroupElement& other) const {
  return compare_coords(coords_, other.coords_);
}

MonoidElement add(const MonoidElement& a, const MonoidElement& b) {
  require_same_rank(a.rank(), b.rank(), "add");
  std::vector<Integer> c(a.coords());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return MonoidElement(std::move(c));
}

MonoidElement operator+(const MonoidElement& a, const MonoidElement& b) {
  return add(a, b);
}

bool leq(const MonoidElement& a, const MonoidElement& b) {
  require_same_rank(a.rank(), b.rank(), "leq");
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (b[i] < a[i]) return false;
  }
  return true;
}

bool leq(const GroupElement& a, const GroupElement& b) {
  require_same_rank(a.rank(), b.rank(), "leq");
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (b[i] < a[i]) return false;
  }
  return true;
}

GroupElement difference(const MonoidElement& a, const MonoidElement& b) {
  return a.to_group() - b.to_group();
}

std::optional<Integer> integer_multiple_of(const GroupElement& d,
                                           const MonoidElement& delta) {
  require_same_rank(d.rank(), delta.rank(), "integer_multiple_of");
  if (delta.is_zero()) {
    if (d.is_zero()) return Integer(0);
    return std::nullopt;
  }
  std::optional<Integer> m;
  for (std::size_t i = 0; i < d.rank(); ++i) {
    if (delta[i] == 0) {
      if (d[i] != 0) return std::nullopt;
      continue;
    }
    if (d[i] % delta[i] != 0) return std::nullopt;
    Integer q = d[i] / delta[i];
    if (m && *m != q) return std::nullopt;
    m = q;
  }
  return m;
}

void validate_face(const Face& face, std::size_t rank) {
  for (auto i : face.killed) {
    if (i >= rank) {
      throw Error(ErrorCode::InvalidFace,
                  "face index " + std::to_string(i + 1) + " exceeds rank " +
                      std::to_string(rank));
    }
  }
}

MonoidElement face_quotient(const MonoidElement& x, const Face& face) {
  return MonoidElement(project(x.coords(), face));
}

GroupElement face_quotient(const GroupElement& x, const Face& face) {
  return GroupElement(project(x.coords(), face));
}

Face compose_faces(const Face& outer, const Face& inner_in_quotient,
                   std::size_t rank) {
  validate_face(outer, rank);
  std::vector<std::size_t> surviving;
  for (std::size_t i = 0; i < rank; ++i) {
    if (!outer.killed.count(i)) surviving.push_back(i);
  }
  validate_face(inner_in_quotient, surviving.size());
  Face out = outer;
  for (auto j : inner_in_quotient.killed) out.killed.insert(surviving[j]);
  return out;
}

std::vector<Face> all_faces(std::size_t rank) {
  if (rank >= 8 * sizeof(std::size_t) - 1) {
    throw Error(ErrorCode::RankBoundExceeded, "rank too large to enumerate");
  }
  std::vector<Face> faces;
  const std::size_t count = std::size_t{1} << rank;
  faces.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    Face f;
    for (std::size_t i = 0; i < rank; ++i) {
      if (mask & (std::size_t{1} << i)) f.killed.insert(i);
    }
    faces.push_back(std::move(f));
  }
  return faces;
}

std::string to_string(const MonoidElement& x) {
  return coords_to_string(x.coords());
}

std::string to_string(const GroupElement& x) {
  return coords_to_string(x.coords());
}

std::string to_string(const Face& face) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto i : face.killed) {
    if (!first) out << ',';
    out << i + 1;
    first = false;
  }
  out << '}';
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const MonoidElement& x) {
  return os << to_string(x);
}

std::ostream& operator<<(std::ostream& os, const GroupElement& x) {
  return os << to_string(x);
}

}  // namespace mesacurve
