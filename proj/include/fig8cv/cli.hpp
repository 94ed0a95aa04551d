#pragma once
// Command-line front end.  Five subcommands cover the day-to-day operations:
// classify a character, trace a stored representation, construct a
// representation file on a chosen component, run a verification suite, and
// apply a symmetry to a character.  Everything routes through run_cli so the
// tests can drive the interface in process.
//
// Exit codes: 0 success (classify found at least one component, suite
// passed), 1 suite failed, 2 malformed input, 3 empty classification,
// 4 broken group relation, 5 parameters on an excluded locus.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fig8cv/components.hpp"
#include "fig8cv/constructors.hpp"
#include "fig8cv/repr_io.hpp"
#include "fig8cv/sl2.hpp"
#include "fig8cv/verify.hpp"

namespace fig8cv {
namespace cli {

namespace detail {

inline std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline SqrtCtxPtr ctx_from_flag(const std::string& sqrt_flag) {
  if (sqrt_flag.empty()) return nullptr;
  const FieldElem d = parse_elem(sqrt_flag);
  const SqrtCtxPtr ctx = sqrt_adjoin(d.base_part());
  return ctx->degenerate() ? nullptr : ctx;
}

inline std::vector<FieldElem> parse_elems(const std::string& text, const SqrtCtxPtr& ctx,
                                          std::size_t count, const std::string& what) {
  const auto parts = split_commas(text);
  if (parts.size() != count) {
    throw parse_error(what + " needs " + std::to_string(count) + " comma-separated values, got " +
                      std::to_string(parts.size()), 0);
  }
  std::vector<FieldElem> out;
  out.reserve(count);
  for (const auto& part : parts) out.push_back(parse_elem(part, ctx));
  return out;
}

inline CharCoords coords_from(const std::vector<FieldElem>& v) {
  return CharCoords{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], std::nullopt};
}

inline std::string join(const std::array<FieldElem, 8>& t) {
  std::string out;
  for (std::size_t k = 0; k < 8; ++k) {
    if (k) out += ",";
    out += to_string(t[k]);
  }
  return out;
}

inline std::string coords_line(const CharCoords& c) {
  std::string out = join(c.tuple());
  if (c.eta) out += " eta=" + to_string(*c.eta);
  return out;
}

inline std::string orbit_line(const OrbitCoords& o) {
  std::string out = "u=";
  for (std::size_t k = 0; k < 12; ++k) {
    if (k) out += ",";
    out += to_string(o.u[k]);
  }
  out += " fiber=" + to_string(o.alpha) + "," + to_string(o.alphabar) + "," + to_string(o.beta) +
         "," + to_string(o.betabar);
  if (o.eta) out += " eta=" + to_string(*o.eta);
  return out;
}

// Point files hold a bare character: the field, eight coordinates, and
// optionally the longitude trace.
inline CharCoords read_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw io_error(std::string("malformed point file: ") + e.what());
  }
  SqrtCtxPtr ctx;
  if (j.contains("field") && j.at("field").contains("sqrt")) {
    const FieldElem d = parse_elem(j.at("field").at("sqrt").get<std::string>());
    ctx = sqrt_adjoin(d.base_part());
  }
  if (!j.contains("coords") || !j.at("coords").is_array() || j.at("coords").size() != 8) {
    throw io_error("a point file needs a 'coords' array with eight entries");
  }
  std::vector<FieldElem> v;
  for (const auto& cell : j.at("coords")) v.push_back(parse_elem(cell.get<std::string>(), ctx));
  CharCoords c = coords_from(v);
  if (j.contains("eta")) c.eta = parse_elem(j.at("eta").get<std::string>(), ctx);
  return c;
}

inline FMat3 diag(const FieldElem& a, const FieldElem& b, const FieldElem& c) {
  const FieldElem z(0);
  return FMat3(a, z, z, z, b, z, z, z, c);
}

inline FMat3 block(const FMat2& m, const FieldElem& corner) {
  const FieldElem z(0);
  return FMat3(m.at(0, 0), m.at(0, 1), z, m.at(1, 0), m.at(1, 1), z, z, z, corner);
}

// Roots of a monic-in-spirit quadratic, adjoining the discriminant's square
// root when the base field lacks one.  Fails when the coefficients already
// live in an extension that does not contain the root.
inline std::pair<FieldElem, FieldElem> roots_adjoining(const UPoly& quad) {
  if (auto roots = quadratic_roots_in_field(quad)) return *roots;
  const FieldElem disc = quadratic_discriminant(quad);
  if (!disc.in_base_field()) {
    throw arithmetic_error("the required square root lives beyond a single extension");
  }
  const SqrtCtxPtr ctx = sqrt_adjoin(disc.base_part());
  const auto roots = quadratic_roots_in_field(quad, ctx);
  if (!roots) throw arithmetic_error("the required square root lives beyond a single extension");
  return *roots;
}

// Totally reducible: both generators share a diagonal image.
inline ReprFile construct_xtr(const std::vector<FieldElem>& p) {
  const FieldElem &d1 = p[0], &d2 = p[1];
  if (d1.is_zero() || d2.is_zero()) throw arithmetic_error("eigenvalues must be nonzero");
  const FMat3 m = diag(d1, d2, (d1 * d2).inverse());
  return repr_file(Representation(Alphabet::ST, {m, m}));
}

// Partially reducible: a scaled irreducible 2x2 pair in one block and the
// determinant's inverse in the other.  The parameters are the eigenvalue of
// the unscaled meridian and the scale factor; the branch picks one root of
// the quadratic tying the off-diagonal entry to the eigenvalue.
inline ReprFile construct_xpr(const std::vector<FieldElem>& p, char branch) {
  const FieldElem &s = p[0], &lam = p[1];
  if (s.is_zero() || lam.is_zero()) throw arithmetic_error("both parameters must be nonzero");
  const FieldElem c = s.pow(4) - FieldElem(3) * s * s + FieldElem(1);
  if (c.is_zero()) throw arithmetic_error("the eigenvalue sits on the degenerate quartic");
  const UPoly quad = (s * s) * UPoly::x(2) + c * UPoly::x(1) - UPoly(c);
  const auto roots = roots_adjoining(quad);
  const SL2Rep r2 = riley_rep(s, branch == '+' ? roots.first : roots.second);
  const FieldElem corner = (lam * lam).inverse();
  return repr_file(Representation(
      Alphabet::ST, {block(lam * r2.s_image(), corner), block(lam * r2.t_image(), corner)}));
}

// Families over the three surviving components.  Away from the degenerate
// locus the chart matrices exist and go straight into the file.  On the
// reducible boundary the character lifts to a totally reducible one; when
// that lift is symmetric its eigenvalue cubic splits off lambda = 1 and the
// remaining quadratic is solved by one adjunction.
inline ReprFile construct_family(Component id, const std::vector<FieldElem>& p, char branch) {
  OrbitFamily fam;
  switch (id) {
    case Component::V0:
      fam = v0_family(p[0], p[1], branch);
      break;
    case Component::V1:
      fam = v1_family(p[0], p[1], branch);
      break;
    default:
      fam = v2_family(p[0], p[1], branch);
      break;
  }
  if (fam.mats) {
    return repr_file(Representation(Alphabet::TAB, {fam.mats->t0, fam.mats->a, fam.mats->b}));
  }
  const auto lifts = lift_orbit(fam.orbit);
  if (!lifts) throw arithmetic_error("the chart matrices degenerate at these parameters");
  for (const auto& lift : *lifts) {
    if (!classify(lift).count(Component::XTR) || lift.y != lift.ybar) continue;
    const FieldElem d = lift.y - FieldElem(1);
    const auto roots = roots_adjoining(UPoly::x(2) - d * UPoly::x(1) + UPoly(FieldElem(1)));
    const FMat3 id3 = FMat3::identity();
    const Representation rho(Alphabet::TAB,
                             {diag(FieldElem(1), roots.first, roots.second), id3, id3});
    if (orbit(extract(rho)) == fam.orbit) return repr_file(rho);
  }
  throw arithmetic_error("the chart matrices degenerate at these parameters");
}

inline ReprFile construct_slice(const std::vector<FieldElem>& p) {
  return repr_file(slice_rep(SlicePoint{p[0], p[1], p[2], p[3]}));
}

inline nlohmann::json report_json(const Report& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["citation"] = r.citation;
  j["mode"] = to_string(r.mode);
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["result"] = r.passed() ? "PASS" : "FAIL";
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& v : r.identities) {
    nlohmann::json one;
    one["name"] = v.name;
    one["passed"] = v.passed;
    one["budget_fallback"] = v.budget_fallback;
    if (!v.witness.empty()) one["witness"] = v.witness;
    ids.push_back(std::move(one));
  }
  j["identities"] = std::move(ids);
  return j;
}

struct Options {
  std::string coords, file, sqrt_flag, rep, component, params, branch = "+", out, name;
  std::string mode = "sampled", op;
  int n = 50;
  long seed = 1;
  bool orbit = false, lax = false, list = false, json = false;
};

inline int cmd_classify(const Options& opt, std::ostream& out) {
  CharCoords c = opt.file.empty()
                     ? coords_from(parse_elems(opt.coords, ctx_from_flag(opt.sqrt_flag), 8,
                                               "--coords"))
                     : read_point_file(opt.file);
  const ComponentSet cls = classify(c);
  std::string line;
  for (const auto& k : cls) {
    if (!line.empty()) line += " ";
    line += to_string(k);
  }
  if (!line.empty()) out << line << "\n";
  if (cls.count(Component::XPR)) {
    if (const auto pars = xpr_parameters(c)) {
      const FieldElem x1 = c.alpha - FieldElem(1);
      out << "XPR parameters: v=" << to_string(pars->first) << " w=" << to_string(pars->second)
          << " x1=" << to_string(x1);
      if (const auto& ctx = pars->second.ctx()) {
        out << " where s^2=" << to_string(FieldElem(ctx->D));
      } else if (const auto& vctx = pars->first.ctx()) {
        out << " where s^2=" << to_string(FieldElem(vctx->D));
      }
      out << "\n";
    }
  }
  return cls.empty() ? 3 : 0;
}

inline int cmd_trace(const Options& opt, std::ostream& out, std::ostream& err) {
  const ReprFile f = read_repr_file(opt.rep);
  if (const auto rel = failing_relation(f)) {
    if (!opt.lax) {
      err << "relation failed: " << *rel << "\n";
      return 4;
    }
    err << "warning: relation failed: " << *rel << "\n";
  }
  if (f.alphabet == Alphabet::KL) {
    err << "the order-three presentation has no meridian; trace reads ST or TAB files\n";
    return 2;
  }
  const CharCoords c = f.dim == 2 ? sym2_bridge(f.sl2()) : extract(f.representation());
  out << (opt.orbit ? orbit_line(orbit(c)) : coords_line(c)) << "\n";
  return 0;
}

inline int cmd_construct(const Options& opt, std::ostream& out) {
  const auto id = component_from_string(opt.component);
  if (!id && opt.component != "SLICE") {
    throw parse_error("unknown component '" + opt.component + "'", 0);
  }
  const char branch = opt.branch == "-" ? '-' : '+';
  const SqrtCtxPtr ctx = ctx_from_flag(opt.sqrt_flag);
  ReprFile f;
  try {
    if (!id) {
      f = construct_slice(parse_elems(opt.params, ctx, 4, "--params"));
    } else {
      const auto p = parse_elems(opt.params, ctx, 2, "--params");
      switch (*id) {
        case Component::XTR:
          f = construct_xtr(p);
          break;
        case Component::XPR:
          f = construct_xpr(p, branch);
          break;
        default:
          f = construct_family(*id, p, branch);
          break;
      }
    }
  } catch (const relation_error& e) {
    throw arithmetic_error(e.what());
  }
  if (opt.out.empty()) {
    out << repr_text(f);
  } else {
    write_repr_file(f, opt.out);
  }
  return 0;
}

inline int cmd_suite(const Options& opt, std::ostream& out) {
  if (opt.list) {
    for (const auto& info : list_suites()) {
      out << info.name << "  (" << info.citation << ")  "
          << (info.symbolic ? "symbolic,sampled" : "sampled") << "\n";
    }
    return 0;
  }
  if (opt.name.empty()) throw verify_error("suite needs --name or --list");
  const Report r = run_suite(opt.name, suite_mode_from(opt.mode), opt.n,
                             static_cast<unsigned long>(opt.seed));
  if (opt.json) {
    out << report_json(r).dump(2) << "\n";
  } else {
    out << r.text();
  }
  return r.passed() ? 0 : 1;
}

inline int cmd_symmetry(const Options& opt, std::ostream& out) {
  const CharCoords c =
      coords_from(parse_elems(opt.coords, ctx_from_flag(opt.sqrt_flag), 8, "--coords"));
  CharCoords image;
  if (opt.op == "f") {
    image = sym_f(c);
  } else if (opt.op == "h") {
    image = sym_h(c);
  } else if (opt.op == "w") {
    image = mu3_act(1, c);
  } else {
    throw parse_error("unknown symmetry '" + opt.op + "' (expected f, h, or w)", 0);
  }
  out << join(image.tuple()) << "\n";
  return 0;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options opt;
  CLI::App app{"exact coordinates on the figure-eight knot character varieties"};
  app.require_subcommand(1);

  auto* cls = app.add_subcommand("classify", "list the components containing a character");
  cls->add_option("--coords", opt.coords, "eight comma-separated coordinate values");
  cls->add_option("--file", opt.file, "JSON point file");
  cls->add_option("--sqrt", opt.sqrt_flag, "declare s^2 for coordinate parsing");

  auto* trc = app.add_subcommand("trace", "trace coordinates of a stored representation");
  trc->add_option("--rep", opt.rep, "representation file")->required();
  trc->add_flag("--orbit", opt.orbit, "print center-invariant orbit coordinates");
  trc->add_flag("--lax", opt.lax, "warn instead of failing when a relation breaks");

  auto* con = app.add_subcommand("construct", "write a representation file on a component");
  con->add_option("--component", opt.component, "XTR, XPR, V0, V1, V2, or SLICE")->required();
  con->add_option("--params", opt.params, "chart parameters, comma separated")->required();
  con->add_option("--branch", opt.branch, "+ or - root of the covering (default +)");
  con->add_option("--out", opt.out, "output path (omit to print)");
  con->add_option("--sqrt", opt.sqrt_flag, "declare s^2 for parameter parsing");

  auto* sut = app.add_subcommand("suite", "run a verification suite");
  sut->add_option("--name", opt.name, "suite name (see --list)");
  sut->add_option("--mode", opt.mode, "symbolic or sampled (default sampled)");
  sut->add_option("--n", opt.n, "sample count (default 50)");
  sut->add_option("--seed", opt.seed, "sampling seed (default 1)");
  sut->add_flag("--list", opt.list, "list the available suites");
  sut->add_flag("--json", opt.json, "print the report as JSON");

  auto* sym = app.add_subcommand("symmetry", "apply f, h, or the center generator w");
  sym->add_option("--op", opt.op, "f, h, or w")->required();
  sym->add_option("--coords", opt.coords, "eight comma-separated coordinate values")->required();
  sym->add_option("--sqrt", opt.sqrt_flag, "declare s^2 for coordinate parsing");

  std::vector<const char*> argv;
  argv.push_back("fig8");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cls->parsed()) {
      if (opt.coords.empty() == opt.file.empty()) {
        throw parse_error("classify needs exactly one of --coords or --file", 0);
      }
      return detail::cmd_classify(opt, out);
    }
    if (trc->parsed()) return detail::cmd_trace(opt, out, err);
    if (con->parsed()) return detail::cmd_construct(opt, out);
    if (sut->parsed()) return detail::cmd_suite(opt, out);
    if (sym->parsed()) return detail::cmd_symmetry(opt, out);
  } catch (const relation_error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const arithmetic_error& e) {
    err << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cli
}  // namespace fig8cv
