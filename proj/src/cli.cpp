#include "qsl2/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qsl2/clebsch.hpp"
#include "qsl2/errors.hpp"
#include "qsl2/json_io.hpp"
#include "qsl2/parse.hpp"
#include "qsl2/rep.hpp"
#include "qsl2/tensorop.hpp"

namespace qsl2 {

namespace {

struct CommonOpts {
  std::string numeric;
  bool json = false;
  bool text = false;
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--numeric", o.numeric, "evaluate at t = t0 (rational or decimal)");
  cmd->add_flag("--json", o.json, "JSON output");
  cmd->add_flag("--text", o.text, "plain text output");
  cmd->add_option("--output", o.output, "write output to a file");
}

// "2", "-3/2", or a decimal like "1.000001".
Rat parse_t0(const std::string& s) {
  size_t dot = s.find('.');
  if (dot == std::string::npos) {
    try {
      return rat_from_string(s);
    } catch (const ScalarError&) {
      throw ParseError("bad numeric value '" + s + "'", 0);
    }
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t frac_len = s.size() - dot - 1;
  if (digits.empty() || frac_len == 0) throw ParseError("bad numeric value '" + s + "'", dot);
  std::string den = "1" + std::string(frac_len, '0');
  try {
    return rat_from_string(digits + "/" + den);
  } catch (const ScalarError&) {
    throw ParseError("bad numeric value '" + s + "'", 0);
  }
}

HalfInt max_spin() {
  if (const char* env = std::getenv("QSL2_MAX_SPIN")) {
    try {
      return HalfInt::parse(env);
    } catch (...) {
      throw RangeError("QSL2_MAX_SPIN is not a valid spin");
    }
  }
  return HalfInt(4);
}

HalfInt parse_spin(const std::string& s) {
  HalfInt v;
  try {
    v = HalfInt::parse(s);
  } catch (...) {
    throw ParseError("bad spin '" + s + "'", 0);
  }
  if (v.twice() < 0) throw RangeError("spin must be non-negative");
  if (v > max_spin()) throw RangeError("spin exceeds QSL2_MAX_SPIN");
  return v;
}

long parse_integer_spin(const std::string& s) {
  HalfInt v = parse_spin(s);
  if (!v.is_integer()) throw RangeError("spin must be an integer");
  return v.as_int();
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

Json matrix_json(const HalfInt& l, const ScalarMatrix& m,
                 const std::optional<Rat>& t0) {
  Json rows = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) {
      if (t0)
        row.push_back(m.at(r, c).eval(*t0));
      else
        row.push_back(to_json(m.at(r, c)));
    }
    rows.push_back(row);
  }
  return Json{{"l", l.str()}, {"rows", rows}};
}

std::string matrix_text(const ScalarMatrix& m, const std::optional<Rat>& t0) {
  if (!t0) return m.str();
  std::ostringstream os;
  for (size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << fmt_double(m.at(r, c).eval(*t0));
    }
    os << ']';
    if (r + 1 < m.rows()) os << '\n';
  }
  return os.str();
}

Json scalar_json(const RadicalScalar& v, const std::optional<Rat>& t0) {
  if (t0) return Json(v.eval(*t0));
  return to_json(v);
}

struct CommandIO {
  std::ostringstream buf;
  const CommonOpts& opts;
  std::optional<Rat> t0;

  explicit CommandIO(const CommonOpts& o) : opts(o) {
    if (!o.numeric.empty()) t0 = parse_t0(o.numeric);
  }

  // default_json: format used when neither --json nor --text is given
  bool want_json(bool default_json) const {
    if (opts.json) return true;
    if (opts.text) return false;
    return default_json;
  }

  int flush(std::ostream& out, std::ostream& err, int code) {
    if (!opts.output.empty()) {
      std::ofstream f(opts.output);
      if (!f) {
        err << "error: cannot write " << opts.output << "\n";
        return 1;
      }
      f << buf.str();
    } else {
      out << buf.str();
    }
    return code;
  }
};

int cmd_normal_form(const std::string& expr, CommandIO& io, std::ostream& out,
                    std::ostream& err) {
  AlgebraElement x = parse_element(expr);
  if (io.want_json(false)) {
    Json j;
    j["input"] = expr;
    j["element"] = x.str();
    if (io.t0) {
      Json terms = Json::array();
      for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
        terms.push_back(Json{{"monomial", it->first.str()}, {"value", it->second.eval(*io.t0)}});
      j["terms"] = terms;
    } else {
      j["terms"] = to_json(x);
    }
    io.buf << j.dump(2) << "\n";
  } else if (io.t0) {
    bool first = true;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
      if (!first) io.buf << " + ";
      io.buf << fmt_double(it->second.eval(*io.t0));
      if (!it->first.is_unit()) io.buf << " * " << it->first.str();
      first = false;
    }
    if (first) io.buf << "0";
    io.buf << "\n";
  } else {
    io.buf << x.str() << "\n";
  }
  return io.flush(out, err, 0);
}

int cmd_rep(const std::string& spin, const std::string& expr, CommandIO& io,
            std::ostream& out, std::ostream& err) {
  HalfInt l = parse_spin(spin);
  AlgebraElement x = parse_element(expr);
  ScalarMatrix m = rep_of_element(l, x);
  if (io.want_json(true))
    io.buf << matrix_json(l, m, io.t0).dump(2) << "\n";
  else
    io.buf << matrix_text(m, io.t0) << "\n";
  return io.flush(out, err, 0);
}

int cmd_cg(const std::string& ks, const std::string& ls, CommandIO& io,
           std::ostream& out, std::ostream& err) {
  HalfInt k = parse_spin(ks);
  HalfInt l = parse_spin(ls);
  CGTable table = cg_table(k, l);
  std::vector<HalfInt> spins = table.target_spins();
  if (io.want_json(true)) {
    Json blocks = Json::array();
    for (auto it = spins.rbegin(); it != spins.rend(); ++it) {
      HalfInt j = *it;
      for (int mt = j.twice(); mt >= -j.twice(); mt -= 2) {
        HalfInt m = HalfInt::from_twice(mt);
        Json coeffs = Json::array();
        for (int pt = k.twice(); pt >= -k.twice(); pt -= 2) {
          HalfInt p = HalfInt::from_twice(pt);
          HalfInt n = m - p;
          if (std::abs(n.twice()) > l.twice()) continue;
          coeffs.push_back(Json{{"p", p.str()},
                                {"n", n.str()},
                                {"value", scalar_json(table.get(j, p, n, m), io.t0)}});
        }
        blocks.push_back(Json{{"j", j.str()}, {"m", m.str()}, {"coefficients", coeffs}});
      }
    }
    io.buf << Json{{"k", k.str()}, {"l", l.str()}, {"blocks", blocks}}.dump(2) << "\n";
  } else {
    for (auto it = spins.rbegin(); it != spins.rend(); ++it) {
      HalfInt j = *it;
      for (int mt = j.twice(); mt >= -j.twice(); mt -= 2) {
        HalfInt m = HalfInt::from_twice(mt);
        io.buf << "j=" << j.str() << " m=" << m.str() << ":";
        for (int pt = k.twice(); pt >= -k.twice(); pt -= 2) {
          HalfInt p = HalfInt::from_twice(pt);
          HalfInt n = m - p;
          if (std::abs(n.twice()) > l.twice()) continue;
          RadicalScalar v = table.get(j, p, n, m);
          io.buf << "  (" << p.str() << "," << n.str() << ") -> "
                 << (io.t0 ? fmt_double(v.eval(*io.t0)) : v.str());
        }
        io.buf << "\n";
      }
    }
  }
  return io.flush(out, err, 0);
}

int cmd_wigner_eckart(const std::string& ls, const std::string& js, CommandIO& io,
                      std::ostream& out, std::ostream& err) {
  long l = parse_integer_spin(ls);
  if (l < 1) throw RangeError("orbit spin must be a positive integer");
  HalfInt j = parse_spin(js);
  RadicalScalar closed = reduced_me_closed_form(l, j);  // rejects 2j < l
  TensorOperator T = tensor_operator_from_rep(l, j);
  CGTable cg = cg_table(HalfInt(static_cast<int>(l)), j);
  ReducedME rme = reduced_matrix_element(T, cg);
  bool match = (rme.alpha - closed).is_zero();
  int code = (rme.consistent && match) ? 0 : 1;
  if (io.want_json(true)) {
    Json witnesses = Json::array();
    for (const auto& [m, p, n] : rme.witnesses)
      witnesses.push_back(Json{{"m", m.str()}, {"p", p.str()}, {"n", n.str()}});
    Json jrep{{"l", std::to_string(l)},
              {"j", j.str()},
              {"alpha", scalar_json(rme.alpha, io.t0)},
              {"alpha_closed_form", scalar_json(closed, io.t0)},
              {"consistent", rme.consistent},
              {"closed_form_match", match},
              {"witnesses", witnesses}};
    io.buf << jrep.dump(2) << "\n";
  } else {
    io.buf << "alpha = " << (io.t0 ? fmt_double(rme.alpha.eval(*io.t0)) : rme.alpha.str())
           << "\n";
    io.buf << "alpha (closed form) = "
           << (io.t0 ? fmt_double(closed.eval(*io.t0)) : closed.str()) << "\n";
    io.buf << "consistent: " << (rme.consistent ? "true" : "false") << "\n";
    io.buf << "closed form match: " << (match ? "true" : "false") << "\n";
  }
  return io.flush(out, err, code);
}

int cmd_center(const std::string& js, CommandIO& io, std::ostream& out,
               std::ostream& err) {
  long j = parse_integer_spin(js);
  AlgebraElement c = central_element(j);
  const char* names[] = {"e", "f", "k", "k^-1"};
  AlgebraElement gens[] = {AlgebraElement::e(), AlgebraElement::f(),
                           AlgebraElement::k(1), AlgebraElement::k(-1)};
  bool central = true;
  Json commutes = Json::object();
  Json ad_inv = Json::object();
  for (int i = 0; i < 4; ++i) {
    bool comm = (c * gens[i] - gens[i] * c).is_zero();
    bool ad = (adjoint_action(gens[i], c) - c.scaled(counit(gens[i]))).is_zero();
    commutes[names[i]] = comm;
    ad_inv[names[i]] = ad;
    central = central && comm && ad;
  }
  int code = central ? 0 : 1;
  if (io.want_json(true)) {
    Json jrep{{"j", std::to_string(j)},
              {"element", c.str()},
              {"commutes", commutes},
              {"ad_invariant", ad_inv},
              {"central", central}};
    io.buf << jrep.dump(2) << "\n";
  } else {
    io.buf << "C = " << c.str() << "\n";
    for (int i = 0; i < 4; ++i)
      io.buf << "commutes with " << names[i] << ": "
             << (commutes[names[i]].get<bool>() ? "true" : "false") << "\n";
    io.buf << "ad-invariant: " << (central ? "true" : "false") << "\n";
    io.buf << "central: " << (central ? "true" : "false") << "\n";
  }
  return io.flush(out, err, code);
}

int cmd_adjoint_basis(const std::string& ls, bool closed_form, CommandIO& io,
                      std::ostream& out, std::ostream& err) {
  long l = parse_integer_spin(ls);
  AdjointBasis rec = adjoint_orbit(l);
  AdjointBasis cf = adjoint_orbit_closed_form(l);
  const AdjointBasis& shown = closed_form ? cf : rec;
  bool relations = verify_orbit_relations(rec);
  bool agree = true;
  for (long m = -l; m <= l; ++m)
    agree = agree && (rec.lambda.at(m) - cf.lambda.at(m)).is_zero();
  int code = (relations && agree) ? 0 : 1;
  if (io.want_json(true)) {
    Json lam = Json::object();
    for (long m = l; m >= -l; --m)
      lam[std::to_string(m)] = shown.lambda.at(m).str();
    Json jrep{{"l", std::to_string(l)},
              {"construction", closed_form ? "closed-form" : "recursive"},
              {"lambda", lam},
              {"relations_ok", relations},
              {"constructions_agree", agree}};
    io.buf << jrep.dump(2) << "\n";
  } else {
    for (long m = l; m >= -l; --m)
      io.buf << "lambda[" << m << "] = " << shown.lambda.at(m).str() << "\n";
    io.buf << "relations: " << (relations ? "true" : "false") << "\n";
    io.buf << "constructions agree: " << (agree ? "true" : "false") << "\n";
  }
  return io.flush(out, err, code);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact computer algebra for the quantized enveloping algebra of sl(2)"};
  app.require_subcommand(1);

  CommonOpts o_nf, o_rep, o_cg, o_we, o_center, o_ab;
  std::string nf_expr, rep_spin, rep_expr, cg_k, cg_l, we_l, we_j, center_j, ab_l;
  bool ab_closed = false;

  CLI::App* nf = app.add_subcommand("normal-form", "rewrite an expression to the canonical basis");
  nf->add_option("expr", nf_expr, "expression")->required();
  add_common(nf, o_nf);

  CLI::App* rep = app.add_subcommand("rep", "matrix of an expression in a spin-l representation");
  rep->add_option("-l,--spin", rep_spin, "spin")->required();
  rep->add_option("expr", rep_expr, "expression")->required();
  add_common(rep, o_rep);

  CLI::App* cg = app.add_subcommand("cg", "coupling coefficient table for two spins");
  cg->add_option("-k", cg_k, "first spin")->required();
  cg->add_option("-l", cg_l, "second spin")->required();
  add_common(cg, o_cg);

  CLI::App* we = app.add_subcommand("wigner-eckart",
                                    "extract and verify the reduced matrix element");
  we->add_option("-l", we_l, "orbit spin (integer)")->required();
  we->add_option("-j", we_j, "representation spin")->required();
  add_common(we, o_we);

  CLI::App* center = app.add_subcommand("center", "central element built from the orbit");
  center->add_option("-j", center_j, "orbit spin (integer)")->required();
  add_common(center, o_center);

  CLI::App* ab = app.add_subcommand("adjoint-basis", "orbit basis with relation checks");
  ab->add_option("-l", ab_l, "orbit spin (integer)")->required();
  ab->add_flag("--closed-form", ab_closed, "dump the closed-form construction");
  add_common(ab, o_ab);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (nf->parsed()) {
      CommandIO io(o_nf);
      return cmd_normal_form(nf_expr, io, out, err);
    }
    if (rep->parsed()) {
      CommandIO io(o_rep);
      return cmd_rep(rep_spin, rep_expr, io, out, err);
    }
    if (cg->parsed()) {
      CommandIO io(o_cg);
      return cmd_cg(cg_k, cg_l, io, out, err);
    }
    if (we->parsed()) {
      CommandIO io(o_we);
      return cmd_wigner_eckart(we_l, we_j, io, out, err);
    }
    if (center->parsed()) {
      CommandIO io(o_center);
      return cmd_center(center_j, io, out, err);
    }
    if (ab->parsed()) {
      CommandIO io(o_ab);
      return cmd_adjoint_basis(ab_l, ab_closed, io, out, err);
    }
    err << "error: no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const NegativeRadicandError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const ScalarError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace qsl2
