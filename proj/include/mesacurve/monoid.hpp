/**
 * Exact arithmetic in the free monoid N^r and its groupification Z^r.
 *
 * Elements carry arbitrary-precision coordinates. Faces of N^r are subsets
 * of generator indices; the face quotient projects away the killed
 * coordinates, which models a specialization where those generators become
 * units.
 *
 * Generator indices are 0-based throughout the library. The CLI and the
 * reports print them 1-based.
 */
#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace mesacurve {

using Integer = boost::multiprecision::mpz_int;

class GroupElement;

class MonoidElement {
 public:
  MonoidElement() = default;
  explicit MonoidElement(std::vector<Integer> coords);
  MonoidElement(std::initializer_list<long> coords);

  static MonoidElement zero(std::size_t rank);
  static MonoidElement generator(std::size_t rank, std::size_t index);

  std::size_t rank() const { return coords_.size(); }
  const std::vector<Integer>& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  /// Indices of the nonzero coordinates.
  std::set<std::size_t> support() const;
  GroupElement to_group() const;

  bool operator==(const MonoidElement&) const = default;
  /// Lexicographic; only used for ordered containers, not the monoid order.
  std::strong_ordering operator<=>(const MonoidElement& other) const;

 private:
  std::vector<Integer> coords_;
};

class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Integer> coords);
  GroupElement(std::initializer_list<long> coords);

  static GroupElement zero(std::size_t rank);

  std::size_t rank() const { return coords_.size(); }
  const std::vector<Integer>& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  bool is_nonnegative() const;
  /// Empty when some coordinate is negative.
  std::optional<MonoidElement> to_monoid() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-(const GroupElement& other) const;
  GroupElement operator-() const;
  GroupElement scaled(const Integer& m) const;

  bool operator==(const GroupElement&) const = default;
  std::strong_ordering operator<=>(const GroupElement& other) const;

 private:
  std::vector<Integer> coords_;
};

/// A face of N^r, given by the generators sent to units.
struct Face {
  std::set<std::size_t> killed;

  bool operator==(const Face&) const = default;
  auto operator<=>(const Face&) const = default;
};

MonoidElement add(const MonoidElement& a, const MonoidElement& b);
MonoidElement operator+(const MonoidElement& a, const MonoidElement& b);

/// a <= b iff b - a lies in N^r.
bool leq(const MonoidElement& a, const MonoidElement& b);
bool leq(const GroupElement& a, const GroupElement& b);

/// a - b in the groupification.
GroupElement difference(const MonoidElement& a, const MonoidElement& b);

/**
 * The unique m with d = m * delta, if any. A zero delta only admits d = 0,
 * with answer 0.
 */
std::optional<Integer> integer_multiple_of(const GroupElement& d,
                                           const MonoidElement& delta);

void validate_face(const Face& face, std::size_t rank);

/// Projection of x onto the coordinates outside the face.
MonoidElement face_quotient(const MonoidElement& x, const Face& face);
GroupElement face_quotient(const GroupElement& x, const Face& face);

/**
 * Given a face S of N^r and a face T of the quotient N^(r-|S|) (indexed in
 * the quotient's coordinates), returns S union T in the original indices.
 */
Face compose_faces(const Face& outer, const Face& inner_in_quotient,
                   std::size_t rank);

/// All 2^rank faces, ordered by bitmask.
std::vector<Face> all_faces(std::size_t rank);

std::string to_string(const MonoidElement& x);
std::string to_string(const GroupElement& x);
/// 1-based, e.g. "{1,3}".
std::string to_string(const Face& face);

std::ostream& operator<<(std::ostream& os, const MonoidElement& x);
std::ostream& operator<<(std::ostream& os, const GroupElement& x);

}  // namespace mesacurve
