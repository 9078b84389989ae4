#include "leavitt/cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "leavitt/errors.hpp"
#include "leavitt/gauge.hpp"
#include "leavitt/invariants.hpp"
#include "leavitt/io.hpp"
#include "leavitt/lp_norm.hpp"
#include "leavitt/pure_infinite.hpp"
#include "leavitt/uhf_core.hpp"

namespace leavitt::cli {
namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("invalid JSON input: ") + e.what());
  }
}

class Session {
 public:
  Session(Config& cfg, std::istream& in, std::ostream& out) : cfg_(cfg), in_(in), out_(out) {}

  std::vector<std::string> inputs(const std::vector<std::string>& given) {
    if (!given.empty()) return given;
    std::string all((std::istreambuf_iterator<char>(in_)), std::istreambuf_iterator<char>());
    std::vector<std::string> lines;
    if (trim(all).starts_with('{') || trim(all).starts_with('[')) return {trim(all)};
    std::istringstream stream(all);
    for (std::string line; std::getline(stream, line);)
      if (!trim(line).empty()) lines.push_back(trim(line));
    if (lines.empty()) throw DomainError("no input given (pass an argument or pipe it on stdin)");
    return lines;
  }

  LeavittElement element(const std::string& text) {
    std::string t = trim(text);
    if (t.starts_with('{')) {
      LeavittElement a = element_from_json(parse_json(t));
      if (d_given_ && a.alphabet() != cfg_.d) throw AlphabetMismatch(cfg_.d, a.alphabet());
      return a;
    }
    return parse_element(t, cfg_.d);
  }

  std::vector<LeavittElement> elements(const std::vector<std::string>& given) {
    std::vector<LeavittElement> out;
    for (const auto& s : inputs(given)) out.push_back(element(s));
    return out;
  }

  void emit(const LeavittElement& a) {
    if (cfg_.json) {
      json j = element_to_json(a);
      j["schema"] = kSchema;
      out_ << j.dump() << "\n";
    } else {
      out_ << format_element(a) << "\n";
    }
  }

  void emit_json(json j) {
    j["schema"] = kSchema;
    out_ << j.dump() << "\n";
  }

  lp::NormConfig norm_config() const {
    lp::NormConfig c;
    c.seed = cfg_.seed;
    c.restarts = cfg_.restarts;
    c.max_iter = cfg_.max_iter;
    c.tol = cfg_.tol;
    return c;
  }

  std::optional<std::size_t> r_max() const {
    if (cfg_.r_max == 0) return std::nullopt;
    return cfg_.r_max;
  }

  Config& cfg_;
  std::istream& in_;
  std::ostream& out_;
  bool d_given_ = false;
};

lp::Matrix matrix_from_json(const json& j) {
  const json& rows = j.at("rows");
  if (!rows.is_array() || rows.empty()) throw DomainError("matrix JSON needs a nonempty \"rows\" array");
  auto value = [](const json& v) -> std::complex<double> {
    auto num = [](const json& x) -> double {
      if (x.is_number()) return x.get<double>();
      if (x.is_string()) return Scalar::parse_rational(x.get<std::string>()).get_d();
      throw DomainError("matrix entry parts must be numbers or \"p/q\" strings");
    };
    if (v.is_number() || v.is_string()) return {num(v), 0.0};
    if (v.is_array() && v.size() == 2) return {num(v[0]), num(v[1])};
    if (v.is_object()) return {v.contains("re") ? num(v["re"]) : 0.0, v.contains("im") ? num(v["im"]) : 0.0};
    throw DomainError("unsupported matrix entry");
  };
  auto r = static_cast<Eigen::Index>(rows.size());
  auto c = static_cast<Eigen::Index>(rows[0].size());
  lp::Matrix out(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != c) throw DimensionMismatch("ragged matrix rows");
    for (Eigen::Index k = 0; k < c; ++k) out(i, k) = value(rows[i][k]);
  }
  return out;
}

json interval_to_json(const lp::NormInterval& n) {
  json witness = json::array();
  for (Eigen::Index i = 0; i < n.witness.size(); ++i) witness.push_back({n.witness(i).real(), n.witness(i).imag()});
  return {{"lower", n.lower},
          {"upper", n.upper},
          {"witness", witness},
          {"method", n.method},
          {"converged", n.converged},
          {"assumes_component_equality", n.assumes_component_equality}};
}

mpq_class rational_arg(const std::string& text) { return Scalar::parse_rational(trim(text)); }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact arithmetic in the Leavitt algebra L_d with l^p norm estimates", "leavitt-lp"};
  app.require_subcommand(1);
  app.fallthrough();
  auto* d_opt = app.add_option("-d", cfg.d, "alphabet size d >= 2")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  app.add_option("--p", cfg.p, "exponent p in [1, inf] (\"inf\", \"3/2\", \"2.5\")");
  app.add_flag("--json", cfg.json, "emit JSON");
  app.add_option("--seed", cfg.seed, "seed for randomized numerics");
  app.add_option("--tol", cfg.tol, "power iteration relative tolerance")->check(CLI::PositiveNumber);
  app.add_option("--restarts", cfg.restarts, "power iteration restarts")->check(CLI::Range(1, 1 << 20));
  app.add_option("--max-iter", cfg.max_iter, "iterations per restart")->check(CLI::Range(1, 1 << 30));
  app.add_option("--r-max", cfg.r_max, "cap on the sigma word length search");

  std::vector<std::string> inputs;
  auto with_inputs = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    // Inputs are taken raw from the extras: an option would split "[[1],[]]" as a list.
    sub->allow_extras()->footer("Inputs: element expressions or JSON, given as arguments or on stdin.");
    return sub;
  };
  auto* normalize = with_inputs("normalize", "print the canonical form");
  auto* mul = with_inputs("mul", "product of the inputs, left to right");
  auto* add = with_inputs("add", "sum of the inputs");
  auto* star_cmd = with_inputs("star", "adjoint (s_j <-> t_j, conjugate coefficients)");
  int degree = 0;
  auto* project = with_inputs("project", "degree-n gauge component");
  project->add_option("--degree", degree, "gauge degree n")->required();
  unsigned r = 1;
  auto* shift = with_inputs("shift", "psi_r(a) = sum over |g| = r of s_g a t_g");
  shift->add_option("--r", r, "word length r >= 1")->required()->check(CLI::PositiveNumber);
  std::size_t level = 0;
  auto* expect = with_inputs("expect", "conditional expectation onto the level-m core");
  expect->add_option("--level", level, "target level m")->required();
  auto* trace_cmd = with_inputs("trace", "normalized trace of a core element");
  auto* avg = with_inputs("avg", "signed-permutation group average of a d x d matrix");
  auto* norm = with_inputs("norm", "l^p operator norm interval of an element or matrix");
  auto* witness_cmd = with_inputs("witness", "x, y with x a y = 1");
  auto* annihilate = with_inputs("annihilate", "sigma word killing pairs [[alpha],[beta]] given as JSON");

  std::string seq_text, n_text, contains_text, n1_text, n2_text, p1_text, p2_text;
  auto* snat = app.add_subcommand("snat", "supernatural number of an eventually periodic sequence");
  snat->add_option("--seq", seq_text, "preperiod;period, e.g. \"2;3,4\"")->required();
  auto* k0 = app.add_subcommand("k0", "membership in K_0 of the UHF algebra of type N");
  auto* k0_n = k0->add_option("--n", n_text, "supernatural number, e.g. \"2^inf*3^1\"");
  k0->add_option("--seq", seq_text, "generator sequence instead of --n")->excludes(k0_n);
  k0->add_option("--contains", contains_text, "rational a/b")->required();
  auto* classify = app.add_subcommand("classify", "isomorphism of spatial L^p UHF algebras");
  classify->add_option("--p1", p1_text)->required();
  classify->add_option("--n1", n1_text)->required();
  classify->add_option("--p2", p2_text)->required();
  classify->add_option("--n2", n2_text)->required();
  auto* obstruct = app.add_subcommand("obstruct", "homomorphism obstruction between exponents");
  obstruct->add_option("--p1", p1_text)->required();
  obstruct->add_option("--p2", p2_text)->required();

  app.allow_extras();
  std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_rest.begin(), argv_rest.end());
  try {
    app.parse(argv_rest);
    inputs = app.remaining();
    for (const auto* sub : app.get_subcommands())
      for (auto& text : sub->remaining()) inputs.push_back(std::move(text));
    for (const auto& text : inputs)
      if (text.starts_with("--")) throw CLI::ExtrasError({text});
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Session s(cfg, in, out);
  s.d_given_ = d_opt->count() > 0;
  try {
    if (normalize->parsed()) {
      for (const auto& a : s.elements(inputs)) s.emit(a);
    } else if (mul->parsed() || add->parsed()) {
      auto elems = s.elements(inputs);
      LeavittElement acc = elems.front();
      for (std::size_t k = 1; k < elems.size(); ++k) acc = mul->parsed() ? acc * elems[k] : acc + elems[k];
      s.emit(acc);
    } else if (star_cmd->parsed()) {
      for (const auto& a : s.elements(inputs)) s.emit(star(a));
    } else if (project->parsed()) {
      for (const auto& a : s.elements(inputs)) s.emit(gauge::project(a, degree));
    } else if (shift->parsed()) {
      for (const auto& a : s.elements(inputs)) s.emit(gauge::shift_endo(a, r));
    } else if (expect->parsed()) {
      for (const auto& a : s.elements(inputs)) s.emit(uhf::expect_to_level(a, level));
    } else if (trace_cmd->parsed()) {
      for (const auto& a : s.elements(inputs)) {
        Scalar t = uhf::trace(a);
        if (cfg.json)
          s.emit_json({{"trace", scalar_to_json(t)}});
        else
          out << t.to_string() << "\n";
      }
    } else if (avg->parsed()) {
      for (const auto& text : s.inputs(inputs)) {
        std::string t = trim(text);
        uhf::CoreMatrix m = t.starts_with('{') && parse_json(t).contains("rows")
                                ? uhf::core_matrix_from_json(parse_json(t))
                                : uhf::phi_inv(s.element(t), 1);
        uhf::CoreMatrix result = uhf::group_average(m);
        if (cfg.json) {
          s.emit_json(uhf::core_matrix_to_json(result));
        } else {
          for (std::size_t i = 0; i < result.side(); ++i) {
            for (std::size_t j = 0; j < result.side(); ++j) out << (j ? " " : "") << result(i, j).to_string();
            out << "\n";
          }
        }
      }
    } else if (norm->parsed()) {
      lp::PExponent p = lp::PExponent::parse(cfg.p);
      for (const auto& text : s.inputs(inputs)) {
        std::string t = trim(text);
        lp::NormInterval result;
        if (t.starts_with('{') && parse_json(t).contains("rows"))
          result = lp::opnorm(matrix_from_json(parse_json(t)), p, s.norm_config());
        else
          result = lp::elem_norm(s.element(t), p, s.norm_config());
        if (cfg.json) {
          s.emit_json(interval_to_json(result));
        } else {
          std::ostringstream line;
          line.precision(12);
          line << "[" << result.lower << ", " << result.upper << "] " << result.method;
          out << line.str() << "\n";
        }
      }
    } else if (witness_cmd->parsed()) {
      for (const auto& a : s.elements(inputs)) {
        pi::WitnessPair w = pi::witness(a, s.r_max());
        json j;
        if (cfg.json) {
          j["x"] = element_to_json(w.x);
          j["y"] = element_to_json(w.y);
        } else {
          j["x"] = format_element(w.x);
          j["y"] = format_element(w.y);
        }
        j["check"] = format_element(w.certificate);
        s.emit_json(std::move(j));
      }
    } else if (annihilate->parsed()) {
      for (const auto& text : s.inputs(inputs)) {
        json pairs_json = parse_json(text);
        std::vector<std::pair<Word, Word>> pairs;
        try {
          for (const auto& pj : pairs_json)
            pairs.emplace_back(Word(cfg.d, pj.at(0).get<Letters>()), Word(cfg.d, pj.at(1).get<Letters>()));
        } catch (const json::exception& e) {
          throw DomainError(std::string("pairs must look like [[[1],[]], [[1],[1,1]]]: ") + e.what());
        }
        Word g = pi::annihilating_word(pairs, cfg.d, s.r_max());
        if (cfg.json)
          s.emit_json({{"word", g.letters()}, {"r", g.length()}});
        else
          out << g.to_string() << "\n";
      }
    } else if (snat->parsed()) {
      inv::SupernaturalNumber n = inv::supernatural_of(inv::GeneratorSequence::parse(seq_text));
      if (cfg.json)
        s.emit_json(n.to_json());
      else
        out << n.to_string() << "\n";
    } else if (k0->parsed()) {
      if (n_text.empty() && seq_text.empty()) throw DomainError("k0 needs --n or --seq");
      inv::SupernaturalNumber n = n_text.empty() ? inv::supernatural_of(inv::GeneratorSequence::parse(seq_text))
                                                 : inv::SupernaturalNumber::parse(n_text);
      bool member = inv::k0_contains(n, rational_arg(contains_text));
      if (cfg.json)
        s.emit_json({{"contains", member}});
      else
        out << (member ? "true" : "false") << "\n";
    } else if (classify->parsed()) {
      inv::AlgebraDescriptor a(rational_arg(p1_text), inv::SupernaturalNumber::parse(n1_text));
      inv::AlgebraDescriptor b(rational_arg(p2_text), inv::SupernaturalNumber::parse(n2_text));
      bool iso = inv::classify_iso(a, b);
      if (cfg.json)
        s.emit_json({{"isomorphic", iso}});
      else
        out << (iso ? "isomorphic" : "not isomorphic") << "\n";
    } else if (obstruct->parsed()) {
      inv::Obstruction o = inv::hom_obstruction(rational_arg(p1_text), rational_arg(p2_text));
      if (cfg.json)
        s.emit_json({{"obstruction", inv::to_string(o)}});
      else
        out << inv::to_string(o) << "\n";
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace leavitt::cli
