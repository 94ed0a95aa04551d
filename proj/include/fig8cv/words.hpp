// Words in the three presentations of the figure-eight knot group and its
// Dehn-filling quotient: the two-generator presentation <S,T>, the
// fibered presentation <t,a,b | tat^-1=ab, tbt^-1=bab> with free fiber <a,b>,
// and the (3,3,4) triangle group <k,l | k^3, l^3, (kl)^4>.  Words are freely
// reduced eagerly; conjugacy-level claims are always tested through traces.

#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "fig8cv/mat.hpp"

namespace fig8cv {

struct word_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Alphabet { ST, TAB, KL };

namespace detail {

inline const std::vector<std::string>& generator_names(Alphabet a) {
  static const std::vector<std::string> st = {"S", "T"};
  static const std::vector<std::string> tab = {"t", "a", "b"};
  static const std::vector<std::string> kl = {"k", "l"};
  switch (a) {
    case Alphabet::ST:
      return st;
    case Alphabet::TAB:
      return tab;
    case Alphabet::KL:
      return kl;
  }
  throw word_error("unknown alphabet");
}

}  // namespace detail

inline std::string to_string(Alphabet a) {
  switch (a) {
    case Alphabet::ST:
      return "ST";
    case Alphabet::TAB:
      return "TAB";
    case Alphabet::KL:
      return "KL";
  }
  throw word_error("unknown alphabet");
}

// Letters are signed 1-based generator indices; -x is the inverse of x.
class Word {
 public:
  explicit Word(Alphabet a) : alphabet_(a) {}

  static Word parse(Alphabet a, const std::string& text) {
    Word w(a);
    const auto& names = detail::generator_names(a);
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && text[pos] == ' ') ++pos;
      if (pos >= text.size()) break;
      std::size_t end = pos;
      while (end < text.size() && text[end] != '.' && text[end] != '\'' && text[end] != ' ') {
        ++end;
      }
      const std::string name = text.substr(pos, end - pos);
      int idx = -1;
      for (std::size_t k = 0; k < names.size(); ++k) {
        if (names[k] == name) idx = static_cast<int>(k);
      }
      if (idx < 0) throw word_error("unknown generator '" + name + "'");
      pos = end;
      bool inverse = false;
      if (pos < text.size() && text[pos] == '\'') {
        inverse = true;
        ++pos;
      }
      w.append(inverse ? -(idx + 1) : idx + 1);
      while (pos < text.size() && text[pos] == ' ') ++pos;
      if (pos < text.size()) {
        if (text[pos] != '.') throw word_error("expected '.' between generators");
        ++pos;
        if (pos >= text.size()) throw word_error("trailing separator");
      }
    }
    return w;
  }

  Alphabet alphabet() const { return alphabet_; }
  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  void append(int letter) {
    if (!letters_.empty() && letters_.back() == -letter) {
      letters_.pop_back();
    } else {
      letters_.push_back(letter);
    }
  }

  void append(const Word& other) {
    if (other.alphabet_ != alphabet_) throw word_error("appending across alphabets");
    for (int x : other.letters_) append(x);
  }

  Word inverse() const {
    Word w(alphabet_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.append(-*it);
    return w;
  }

  friend Word operator*(const Word& x, const Word& y) {
    Word w = x;
    w.append(y);
    return w;
  }

  friend bool operator==(const Word& x, const Word& y) {
    return x.alphabet_ == y.alphabet_ && x.letters_ == y.letters_;
  }
  friend bool operator!=(const Word& x, const Word& y) { return !(x == y); }

 private:
  Alphabet alphabet_;
  std::vector<int> letters_;
};

inline std::string to_string(const Word& w) {
  const auto& names = detail::generator_names(w.alphabet());
  std::string out;
  for (int x : w.letters()) {
    if (!out.empty()) out += '.';
    out += names[static_cast<std::size_t>((x > 0 ? x : -x) - 1)];
    if (x < 0) out += '\'';
  }
  return out;
}

namespace detail {

inline Word map_letters(const Word& w, Alphabet target,
                        const std::vector<std::string>& images) {
  Word out(target);
  for (int x : w.letters()) {
    const Word image = Word::parse(target, images[static_cast<std::size_t>((x > 0 ? x : -x) - 1)]);
    out.append(x > 0 ? image : image.inverse());
  }
  return out;
}

}  // namespace detail

// Substitutions between the two presentations of the knot group:
// t = S, a = T^-1 S T S^-1, b = T S^-1 one way; S = t, T = b t the other.
inline Word convert(const Word& w, Alphabet target) {
  if (w.alphabet() == target) return w;
  if (w.alphabet() == Alphabet::KL || target == Alphabet::KL) {
    throw word_error("no conversion between KL and the knot-group alphabets");
  }
  if (target == Alphabet::ST) {
    static const std::vector<std::string> images = {"S", "T'.S.T.S'", "T.S'"};
    return detail::map_letters(w, Alphabet::ST, images);
  }
  static const std::vector<std::string> images = {"t", "b.t"};
  return detail::map_letters(w, Alphabet::TAB, images);
}

enum class Symmetry { f, h };

// The order-2 symmetry f and the order-4 symmetry h, acting on <S,T> words;
// TAB words go through the ST presentation and back.
inline Word apply_automorphism(Symmetry g, const Word& w) {
  if (w.alphabet() == Alphabet::KL) throw word_error("automorphisms act on knot-group words");
  if (w.alphabet() == Alphabet::TAB) {
    return convert(apply_automorphism(g, convert(w, Alphabet::ST)), Alphabet::TAB);
  }
  if (g == Symmetry::f) {
    static const std::vector<std::string> images = {"T'", "S'"};
    return detail::map_letters(w, Alphabet::ST, images);
  }
  static const std::vector<std::string> images = {"S.T'.S'", "T.S'.T'"};
  return detail::map_letters(w, Alphabet::ST, images);
}

// The epimorphism onto the (3,3,4) triangle group that carries the holonomy
// of the exceptional Dehn filling.
inline Word dehn_phi(const Word& w) {
  if (w.alphabet() == Alphabet::ST) {
    static const std::vector<std::string> images = {"k.l.k", "k.l.k.l.k"};
    return detail::map_letters(w, Alphabet::KL, images);
  }
  if (w.alphabet() == Alphabet::TAB) {
    static const std::vector<std::string> images = {"k.l.k", "k'.l'.k.l", "k.l"};
    return detail::map_letters(w, Alphabet::KL, images);
  }
  throw word_error("dehn_phi maps knot-group words to KL");
}

// Peripheral system: the meridian is S = t, the longitude is the commutator
// [a,b] of the fiber generators.
inline Word meridian_word(Alphabet a = Alphabet::TAB) {
  return a == Alphabet::TAB ? Word::parse(a, "t") : convert(Word::parse(Alphabet::TAB, "t"), a);
}

inline Word longitude_word(Alphabet a = Alphabet::TAB) {
  const Word ell = Word::parse(Alphabet::TAB, "a.b.a'.b'");
  return a == Alphabet::TAB ? ell : convert(ell, a);
}

// A representation: matrices for the generators of one alphabet.  Evaluation
// converts ST <-> TAB words as needed; KL stays in its own world.
class Representation {
 public:
  Representation(Alphabet a, std::vector<FMat3> images)
      : alphabet_(a), images_(std::move(images)) {
    if (images_.size() != detail::generator_names(a).size()) {
      throw word_error("wrong number of generator images");
    }
  }

  Alphabet alphabet() const { return alphabet_; }
  const FMat3& image(std::size_t k) const { return images_.at(k); }

  const FMat3& image(const std::string& name) const {
    const auto& names = detail::generator_names(alphabet_);
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (names[k] == name) return images_[k];
    }
    throw word_error("unknown generator '" + name + "'");
  }

  FMat3 eval(const Word& w) const {
    const Word local = w.alphabet() == alphabet_ ? w : convert(w, alphabet_);
    FMat3 acc = FMat3::identity();
    for (int x : local.letters()) {
      const auto idx = static_cast<std::size_t>((x > 0 ? x : -x) - 1);
      acc = acc * (x > 0 ? images_[idx] : images_[idx].inverse());
    }
    return acc;
  }

  FieldElem trace_of(const Word& w) const { return eval(w).trace(); }

  bool check_relations() const {
    switch (alphabet_) {
      case Alphabet::TAB: {
        const FMat3 &t = images_[0], &a = images_[1], &b = images_[2];
        const FMat3 ti = t.inverse();
        return t * a * ti == a * b && t * b * ti == b * a * b;
      }
      case Alphabet::ST: {
        return eval(Word::parse(Alphabet::ST, "S.T'.S'.T.S")) ==
               eval(Word::parse(Alphabet::ST, "T.S.T'.S'.T"));
      }
      case Alphabet::KL: {
        const FMat3 &k = images_[0], &l = images_[1];
        const FMat3 id = FMat3::identity();
        return k.pow(3) == id && l.pow(3) == id && (k * l).pow(4) == id;
      }
    }
    throw word_error("unknown alphabet");
  }

 private:
  Alphabet alphabet_;
  std::vector<FMat3> images_;
};

}  // namespace fig8cv
