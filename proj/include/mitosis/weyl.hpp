#pragma once

// Root data, Weyl groups and Demazure operators on the group algebra of the
// weight lattice. Demazure operators follow the lowest-weight convention
//   D_i e^mu = (e^mu - e^{alpha_i} e^{s_i mu}) / (1 - e^{alpha_i}).

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mitosis {

using Weight = std::vector<long long>;

class WeylError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which simple root of Sp_{2n} gets index 1.
enum class SpConvention {
  ShortFirst,  // alpha_1 short, alpha_2 long (Sp_4 DDO polytope)
  LongFirst,   // s_1 is the long reflection (adapted-string cone)
};

struct RootDatum {
  std::string name;
  int rank = 0;
  int lattice_dim = 0;
  std::vector<Weight> roots;    // alpha_1..alpha_r
  std::vector<Weight> coroots;  // pairing (chi, alpha_i) = coroots[i] . chi
  Weight rho;                   // pairs to 1 with every simple coroot

  long long pairing(const Weight& chi, int i) const;
  /// Cartan integer (alpha_j, alpha_i).
  long long cartan(int j, int i) const { return pairing(roots[j - 1], i); }
  Weight reflect(int i, const Weight& chi) const;
  bool dominant(const Weight& chi) const;

  static RootDatum gl(int n);
  static RootDatum sp(int n, SpConvention conv);
};

using Matrix = std::vector<std::vector<long long>>;

struct WeylElement {
  Matrix matrix;          // acts on the weight lattice
  std::vector<int> word;  // lexicographically least reduced word

  int length() const { return static_cast<int>(word.size()); }
  bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
  bool operator<(const WeylElement& o) const { return matrix < o.matrix; }
};

std::vector<WeylElement> weyl_group(const RootDatum& rd);
WeylElement longest_element(const RootDatum& rd);
/// The element with the given word (not necessarily reduced); its word field is
/// replaced by the canonical reduced word.
WeylElement weyl_element(const RootDatum& rd, const std::vector<int>& word);
Matrix word_matrix(const RootDatum& rd, const std::vector<int>& word);
Weight act(const WeylElement& w, const Weight& chi);
WeylElement inverse(const RootDatum& rd, const WeylElement& w);
WeylElement multiply(const RootDatum& rd, const WeylElement& a, const WeylElement& b);
std::string word_string(const std::vector<int>& word);

/// Finite integer combination of weights.
class CharacterElement {
 public:
  CharacterElement() = default;
  static CharacterElement monomial(const Weight& w, long long coeff = 1);

  void add(const Weight& w, long long coeff);
  long long coeff(const Weight& w) const;
  const std::map<Weight, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coefficient_sum() const;
  bool nonnegative() const;

  CharacterElement operator+(const CharacterElement& o) const;
  CharacterElement operator-(const CharacterElement& o) const;
  CharacterElement operator*(const CharacterElement& o) const;
  bool operator==(const CharacterElement& o) const { return terms_ == o.terms_; }
  /// Multiply by e^shift.
  CharacterElement shifted(const Weight& shift) const;
  std::string to_string() const;

 private:
  std::map<Weight, long long> terms_;
};

CharacterElement demazure(const RootDatum& rd, int i, const CharacterElement& f);
/// D_{j_1} ... D_{j_l} e^{w_0 lambda}; the word must be reduced.
CharacterElement demazure_character(const RootDatum& rd, const std::vector<int>& word,
                                    const Weight& lambda);
long long weyl_dim(const RootDatum& rd, const Weight& lambda);

/// Reduced word of w_0 target w_0^{-1} that is a subword of `ambient`
/// (leftmost positions first).
std::vector<int> subword_reduced_word(const RootDatum& rd, const WeylElement& target,
                                      const std::vector<int>& ambient);
/// Every such subword, as position lists into `ambient`.
std::vector<std::vector<int>> all_compatible_subwords(const RootDatum& rd, const WeylElement& target,
                                                      const std::vector<int>& ambient);

}  // namespace mitosis
