#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "vps/form.hpp"
#include "vps/formspace.hpp"

namespace vps {

/// Hilbert function of S/I, values indexed by degree.
struct HilbFn {
  std::vector<long> values;
  std::optional<long> eventual;  ///< eventual constant value, when detected
  std::optional<int> onset;      ///< first degree from which the value is eventual

  [[nodiscard]] long operator[](std::size_t d) const { return values.at(d); }
  /// "(1,4,4,4,...)" style text.
  [[nodiscard]] std::string str() const;
};

/// Homogeneous ideal given by generators, with lazily computed graded pieces.
/// Copies share the piece cache; the cache is filled under a lock, so an
/// ideal may be read from several threads.
class GradedIdeal {
 public:
  GradedIdeal() : GradedIdeal(Ring::S, 1, {}) {}
  GradedIdeal(Ring ring, int nvars, std::vector<Form> generators);
  static GradedIdeal zero(Ring ring, int nvars) { return GradedIdeal(ring, nvars, {}); }
  static GradedIdeal unit(Ring ring, int nvars);
  /// Parses the ideal file format.
  static GradedIdeal parse(std::string_view text);
  static GradedIdeal from_text(const IdealText& text);
  /// Generators given in the polynomial grammar, ring inferred from the letters.
  static GradedIdeal from_strings(int nvars, const std::vector<std::string>& gens, Ring ring = Ring::S);
  /// An ideal known through its pieces in degrees 0..pieces.size()-1 and
  /// generated in those degrees. Minimal generators are extracted and the
  /// given pieces are seeded into the cache.
  static GradedIdeal from_pieces(Ring ring, int nvars, const std::vector<FormSpace>& pieces);

  [[nodiscard]] Ring ring() const { return ring_; }
  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] const std::vector<Form>& generators() const { return gens_; }
  [[nodiscard]] int max_generator_degree() const;
  [[nodiscard]] bool is_zero() const { return gens_.empty(); }

  /// Row-reduced basis of I_d.
  [[nodiscard]] const FormSpace& piece(int d) const;
  [[nodiscard]] std::size_t dim(int d) const { return piece(d).dim(); }
  /// H_{S/I}(d).
  [[nodiscard]] long hilbert(int d) const;
  [[nodiscard]] bool contains(const Form& f) const;
  /// True when every generator of `other` lies in this ideal.
  [[nodiscard]] bool contains(const GradedIdeal& other) const;
  /// Same pieces in every degree up to d_max.
  [[nodiscard]] bool equal_up_to(const GradedIdeal& other, int d_max) const;

  /// Minimal generators recomputed from the pieces up to d_max.
  [[nodiscard]] std::vector<Form> minimal_generators(int d_max) const;

  [[nodiscard]] IdealText to_text() const { return {ring_, nvars_, gens_}; }
  [[nodiscard]] std::string str() const { return format_ideal_text(to_text()); }

 private:
  struct Cache {
    std::recursive_mutex mu;
    std::map<int, FormSpace> pieces;
  };

  Ring ring_;
  int nvars_;
  std::vector<Form> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Minimal generators of the ideal generated by `pieces` (pieces[d] = I_d):
/// in each degree, the rows of I_d whose pivots are not pivots of S_1·I_{d-1},
/// reduced modulo S_1·I_{d-1} and made monic.
std::vector<Form> extract_generators(const std::vector<FormSpace>& pieces);

/// Hilbert function of S/I for degrees 0..d_max from the graded pieces, with
/// the eventual value taken from the Hilbert polynomial when it is constant.
HilbFn hilbert_function(const GradedIdeal& ideal, int d_max);

}  // namespace vps
