#pragma once
// JSON files holding a representation: the coefficient field, the alphabet,
// and one square matrix of element strings per generator.  Files written here
// read back bit for bit, so fixtures can be kept under version control and
// compared as plain text.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fig8cv/field.hpp"
#include "fig8cv/mat.hpp"
#include "fig8cv/sl2.hpp"
#include "fig8cv/words.hpp"

namespace fig8cv {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// In-memory form of a representation file.  The matrices follow the
// generator order of the alphabet and are stored row major; `dim` is 2 for a
// pair of 2x2 matrices in the two-generator presentation and 3 otherwise.
// `ctx` is null unless the entries mention an adjoined square root.
struct ReprFile {
  SqrtCtxPtr ctx;
  Alphabet alphabet = Alphabet::ST;
  int dim = 3;
  std::vector<std::vector<FieldElem>> mats;

  Representation representation() const {
    if (dim != 3) throw io_error("the file holds 2x2 matrices, not a 3x3 representation");
    std::vector<FMat3> images;
    images.reserve(mats.size());
    for (const auto& m : mats) {
      images.push_back(FMat3(m[0], m[1], m[2], m[3], m[4], m[5], m[6], m[7], m[8]));
    }
    return Representation(alphabet, std::move(images));
  }

  SL2Rep sl2() const {
    if (dim != 2 || alphabet != Alphabet::ST) {
      throw io_error("only the two-generator presentation admits 2x2 files");
    }
    const auto& s = mats[0];
    const auto& t = mats[1];
    return SL2Rep(FMat2(s[0], s[1], s[2], s[3]), FMat2(t[0], t[1], t[2], t[3]));
  }
};

namespace detail {

inline SqrtCtxPtr scan_ctx(const std::vector<std::vector<FieldElem>>& mats) {
  for (const auto& m : mats) {
    for (const auto& e : m) {
      if (e.ctx()) return e.ctx();
    }
  }
  return nullptr;
}

inline Alphabet alphabet_from(const std::string& tag) {
  if (tag == "ST") return Alphabet::ST;
  if (tag == "TAB") return Alphabet::TAB;
  if (tag == "KL") return Alphabet::KL;
  throw io_error("unknown alphabet '" + tag + "'");
}

}  // namespace detail

inline ReprFile repr_file(const Representation& rho) {
  ReprFile f;
  f.alphabet = rho.alphabet();
  f.dim = 3;
  const auto count = detail::generator_names(f.alphabet).size();
  for (std::size_t k = 0; k < count; ++k) {
    const FMat3& m = rho.image(k);
    std::vector<FieldElem> flat;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) flat.push_back(m.at(r, c));
    }
    f.mats.push_back(std::move(flat));
  }
  f.ctx = detail::scan_ctx(f.mats);
  return f;
}

inline ReprFile repr_file(const SL2Rep& rho) {
  ReprFile f;
  f.alphabet = Alphabet::ST;
  f.dim = 2;
  for (const FMat2* m : {&rho.s_image(), &rho.t_image()}) {
    std::vector<FieldElem> flat;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) flat.push_back(m->at(r, c));
    }
    f.mats.push_back(std::move(flat));
  }
  f.ctx = detail::scan_ctx(f.mats);
  return f;
}

inline std::string repr_text(const ReprFile& f) {
  nlohmann::json j;
  j["alphabet"] = to_string(f.alphabet);
  j["field"]["base"] = "Qzeta12";
  if (f.ctx) j["field"]["sqrt"] = to_string(FieldElem(f.ctx->D));
  const auto& names = detail::generator_names(f.alphabet);
  for (std::size_t k = 0; k < names.size(); ++k) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < f.dim; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < f.dim; ++c) {
        row.push_back(to_string(f.mats[k][static_cast<std::size_t>(r * f.dim + c)]));
      }
      rows.push_back(std::move(row));
    }
    j["generators"][names[k]] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

inline ReprFile parse_repr(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw io_error(std::string("malformed representation file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("alphabet") || !j.contains("generators")) {
    throw io_error("a representation file needs 'alphabet' and 'generators' entries");
  }
  ReprFile f;
  f.alphabet = detail::alphabet_from(j.at("alphabet").get<std::string>());
  SqrtCtxPtr ctx;
  if (j.contains("field")) {
    const auto& field = j.at("field");
    if (field.contains("base") && field.at("base").get<std::string>() != "Qzeta12") {
      throw io_error("unsupported base field '" + field.at("base").get<std::string>() + "'");
    }
    if (field.contains("sqrt")) {
      const FieldElem d = parse_elem(field.at("sqrt").get<std::string>());
      ctx = sqrt_adjoin(d.base_part());
    }
  }
  const auto& names = detail::generator_names(f.alphabet);
  const auto& gens = j.at("generators");
  f.dim = 0;
  for (const auto& name : names) {
    if (!gens.contains(name)) throw io_error("missing generator '" + name + "'");
    const auto& rows = gens.at(name);
    if (!rows.is_array() || (rows.size() != 2 && rows.size() != 3)) {
      throw io_error("generator '" + name + "' must be a 2x2 or 3x3 matrix");
    }
    const int dim = static_cast<int>(rows.size());
    if (f.dim == 0) f.dim = dim;
    if (dim != f.dim) throw io_error("generator matrices disagree in size");
    std::vector<FieldElem> flat;
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != dim) {
        throw io_error("generator '" + name + "' is not square");
      }
      for (const auto& cell : row) {
        flat.push_back(parse_elem(cell.get<std::string>(), ctx));
      }
    }
    f.mats.push_back(std::move(flat));
  }
  if (f.dim == 2 && f.alphabet != Alphabet::ST) {
    throw io_error("only the two-generator presentation admits 2x2 files");
  }
  f.ctx = detail::scan_ctx(f.mats);
  return f;
}

inline ReprFile read_repr_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_repr(buf.str());
}

inline void write_repr_file(const ReprFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write '" + path + "'");
  out << repr_text(f);
  if (!out) throw io_error("cannot write '" + path + "'");
}

// The first group relation the matrices break, spelled in the word grammar,
// or nothing when all relations hold.
inline std::optional<std::string> failing_relation(const ReprFile& f) {
  if (f.dim == 2) {
    return f.sl2().check_relations()
               ? std::nullopt
               : std::optional<std::string>("S.T'.S'.T.S = T.S.T'.S'.T");
  }
  const Representation rho = f.representation();
  switch (f.alphabet) {
    case Alphabet::TAB: {
      const FMat3 &t = rho.image(0), &a = rho.image(1), &b = rho.image(2);
      const FMat3 ti = t.inverse();
      if (!(t * a * ti == a * b)) return "t.a.t' = a.b";
      if (!(t * b * ti == b * a * b)) return "t.b.t' = b.a.b";
      return std::nullopt;
    }
    case Alphabet::ST: {
      if (!rho.check_relations()) return "S.T'.S'.T.S = T.S.T'.S'.T";
      return std::nullopt;
    }
    case Alphabet::KL: {
      const FMat3 id = FMat3::identity();
      if (!(rho.image(0).pow(3) == id)) return "k^3 = 1";
      if (!(rho.image(1).pow(3) == id)) return "l^3 = 1";
      if (!((rho.image(0) * rho.image(1)).pow(4) == id)) return "(k.l)^4 = 1";
      return std::nullopt;
    }
  }
  throw word_error("unknown alphabet");
}

}  // namespace fig8cv
