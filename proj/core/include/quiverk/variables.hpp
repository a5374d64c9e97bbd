#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>

namespace quiverk {

// The three variable species used across the library:
//   GrothRoot  e{vertex}_{index}  Grothendieck roots of the tautological
//                                 bundle at a quiver vertex.
//   Residue    z{step}_{index}    integration variables of one resolution
//                                 step; removed again by taking residues.
//   Aux                           everything else (see AuxFamily).
enum class VarKind : std::uint8_t { GrothRoot = 0, Residue = 1, Aux = 2 };

enum class AuxFamily : std::uint8_t {
  Xi = 0,      // "xi"          formal parameter for characteristic-class series
  LocalT = 1,  // "t"           local parameter of a residue computation
  Weight = 2,  // "u{i}_{j}"    per-vertex weight variables
  Shifted = 3, // "v{i}_{j}"    shifted weight variables, u = 1 - v
  Chern = 4,   // "c{i}_{k}"    k-th Chern class symbol of bundle i
  Letter = 5,  // "a", "b3"     free letters for standalone alphabets
  Quot = 6,    // "q{k}_{j}"    roots of the quotient bundle made at step k
};

// Compact value type with a fixed total order. The order (species, then
// family, then the two numeric fields) is what every canonical form in the
// library sorts by, so it must never change between runs.
class Variable {
 public:
  Variable() : kind_(VarKind::Aux), fam_(static_cast<std::uint8_t>(AuxFamily::Xi)), i_(0), j_(0) {}

  static Variable groth_root(int vertex, int index) {
    return Variable(VarKind::GrothRoot, 0, vertex, index);
  }
  static Variable residue(int step, int index) {
    return Variable(VarKind::Residue, 0, step, index);
  }
  static Variable xi() { return Variable(VarKind::Aux, AuxFamily::Xi, 0, 0); }
  static Variable local_t() { return Variable(VarKind::Aux, AuxFamily::LocalT, 0, 0); }
  static Variable weight(int vertex, int index) {
    return Variable(VarKind::Aux, AuxFamily::Weight, vertex, index);
  }
  static Variable shifted_weight(int vertex, int index) {
    return Variable(VarKind::Aux, AuxFamily::Shifted, vertex, index);
  }
  static Variable chern(int bundle, int order) {
    return Variable(VarKind::Aux, AuxFamily::Chern, bundle, order);
  }
  // index < 0 renders as the bare letter.
  static Variable letter(char c, int index = -1) {
    return Variable(VarKind::Aux, AuxFamily::Letter, static_cast<int>(c), index);
  }
  static Variable quot_root(int step, int index) {
    return Variable(VarKind::Aux, AuxFamily::Quot, step, index);
  }

  VarKind kind() const { return kind_; }
  AuxFamily family() const { return static_cast<AuxFamily>(fam_); }
  int first() const { return i_; }
  int second() const { return j_; }

  std::string str() const;

  friend std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
    return a.key() <=> b.key();
  }
  friend bool operator==(const Variable& a, const Variable& b) { return a.key() == b.key(); }

 private:
  Variable(VarKind k, AuxFamily f, int i, int j)
      : kind_(k), fam_(static_cast<std::uint8_t>(f)), i_(static_cast<std::int16_t>(i)),
        j_(static_cast<std::int16_t>(j)) {}
  Variable(VarKind k, std::uint8_t f, int i, int j)
      : kind_(k), fam_(f), i_(static_cast<std::int16_t>(i)), j_(static_cast<std::int16_t>(j)) {}

  std::tuple<std::uint8_t, std::uint8_t, std::int16_t, std::int16_t> key() const {
    return {static_cast<std::uint8_t>(kind_), fam_, i_, j_};
  }

  VarKind kind_;
  std::uint8_t fam_;
  std::int16_t i_, j_;
};

}  // namespace quiverk
