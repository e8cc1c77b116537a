#include "fibcl/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "fibcl/clifford.hpp"
#include "fibcl/error.hpp"
#include "fibcl/fib.hpp"
#include "fibcl/fibquat.hpp"
#include "fibcl/json_io.hpp"
#include "fibcl/quaternion.hpp"

namespace fibcl::cli {

const char* const kGrammar =
    "usage:\n"
    "  fibcl classify --beta1 <rat> --beta2 <rat> [--p <int> --q <int>] [--json]\n"
    "  fibcl nprime --beta1 <rat> --beta2 <rat> [--p <int> --q <int>] [--json]\n"
    "  fibcl fib --n <int>\n"
    "  fibcl quat-mul --beta1 <rat> --beta2 <rat> --x <rat,rat,rat,rat> --y <rat,rat,rat,rat>\n"
    "  fibcl quat-norm --beta1 <rat> --beta2 <rat> --x <rat,rat,rat,rat>\n"
    "  fibcl clifford-table --squares <rat>[,<rat>...] [--json]\n"
    "  fibcl selftest [--json]\n"
    "rationals: [-]digits[/digits], e.g. -3/2\n";

namespace {

constexpr std::size_t kTableRankCap = 8;

// Raised for malformed flag values; maps to the usage exit code.
struct UsageError {
  std::string message;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) parts.push_back(cur);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

Rat rat_arg(const std::string& flag, const std::string& value) {
  try {
    return Rat::parse(value);
  } catch (const Error&) {
    throw UsageError{flag + ": not a rational: '" + value + "'"};
  }
}

Int int_arg(const std::string& flag, const std::string& value) {
  try {
    return parse_int(value);
  } catch (const Error&) {
    throw UsageError{flag + ": not an integer: '" + value + "'"};
  }
}

std::uint64_t index_arg(const std::string& flag, const std::string& value) {
  const Int v = int_arg(flag, value);
  if (v < 0 || !v.fits_ulong_p()) throw UsageError{flag + ": expected a nonnegative index"};
  return v.get_ui();
}

std::vector<Rat> rat_list(const std::string& flag, const std::string& value) {
  std::vector<Rat> out;
  for (const auto& part : split_commas(value)) out.push_back(rat_arg(flag, part));
  return out;
}

AlgebraParams params_arg(const std::string& b1, const std::string& b2) {
  Rat beta1 = rat_arg("--beta1", b1);
  Rat beta2 = rat_arg("--beta2", b2);
  try {
    return {std::move(beta1), std::move(beta2)};
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
}

Quaternion quat_arg(const std::string& flag, const std::string& value, const AlgebraParams& p) {
  const auto coeffs = rat_list(flag, value);
  if (coeffs.size() != 4) throw UsageError{flag + ": expected 4 comma-separated rationals"};
  return {p, {coeffs[0], coeffs[1], coeffs[2], coeffs[3]}};
}

std::string coeff_list(const Quaternion& q) {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) out += ",";
    out += q[i].str();
  }
  return out;
}

// a + b sqrt5 rewritten over {1, alpha}: sqrt5 = 2 alpha - 1.
std::string alpha_form(const QSqrt5& x) {
  const Rat c0 = x.a() - x.b();
  const Rat c1 = Rat(2) * x.b();
  if (c1.is_zero()) return c0.str();
  std::string out = c0.str();
  out += c1.sign() < 0 ? " - " : " + ";
  const Rat mag = c1.abs();
  if (mag != Rat(1)) out += mag.str() + "*";
  return out + "alpha";
}

struct GenSeed {
  Int p;
  Int q;
};

void print_certificate_text(const ThresholdCertificate& c, const std::string& label,
                            std::ostream& out) {
  out << label << " = " << c.n_prime << "\n"
      << "horizon = " << c.horizon << "\n"
      << "limit_sign = " << (c.limit_sign > 0 ? "+1" : "-1") << "\n";
}

int cmd_classify(const AlgebraParams& params, const std::optional<GenSeed>& seed, bool json,
                 std::ostream& out) {
  const ClassificationReport r = classify(params);
  std::optional<QSqrt5> eprime;
  std::optional<ThresholdCertificate> gen;
  if (seed) {
    eprime = energy_E_prime(params, seed->p, seed->q);
    gen = gen_invertibility_threshold(params, seed->p, seed->q);
  }
  if (json) {
    Json j = to_json(r);
    if (seed) {
      j["p"] = seed->p.get_str();
      j["q"] = seed->q.get_str();
      j["E_prime"] = to_json(*eprime);
      j["gen_certificate"] = to_json(*gen);
    }
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "algebra = " << params.str() << "\n"
      << "E = " << r.E.str() << " = (" << alpha_form(r.E * QSqrt5(5)) << ")/5\n"
      << "sign(E) = " << (r.sign_E > 0 ? "+1" : "-1") << "\n"
      << "input division algebra = " << (r.input_is_division ? "yes" : "no") << "\n"
      << "n′ = " << r.certificate.n_prime << "\n"
      << "horizon = " << r.certificate.horizon << "\n"
      << "form = [" << r.form[0] << ", " << r.form[1] << "] at n = " << r.basepoint << "\n"
      << "clifford class = " << class_name(r.clifford_class) << "\n"
      << "canonical = " << r.canonical.str() << "\n"
      << "scaling witness = (" << r.scaling_witness[0] << ", " << r.scaling_witness[1] << ")\n";
  if (seed) {
    out << "E′ = " << eprime->str() << "\n"
        << "n₀′ (H^{" << seed->p.get_str() << "," << seed->q.get_str() << "}) = " << gen->n_prime
        << "\n";
  }
  return kExitOk;
}

int cmd_nprime(const AlgebraParams& params, const std::optional<GenSeed>& seed, bool json,
               std::ostream& out) {
  const ThresholdCertificate c = seed ? gen_invertibility_threshold(params, seed->p, seed->q)
                                      : invertibility_threshold(params);
  if (json) {
    out << to_json(c).dump() << "\n";
  } else {
    print_certificate_text(c, "n′", out);
  }
  return kExitOk;
}

int cmd_clifford_table(const std::vector<Rat>& squares, bool json, std::ostream& out) {
  if (squares.size() > kTableRankCap) {
    throw UsageError{"--squares: at most " + std::to_string(kTableRankCap) + " generators"};
  }
  const DiagonalForm form(squares);
  const auto table = multiplication_table(form);
  const auto dim = static_cast<Blade>(table.size());
  auto cell_text = [](const BladeProduct& p) {
    const std::string name = blade_name(p.blade);
    if (p.coeff == Rat(1)) return name;
    if (p.coeff == Rat(-1)) return "-" + name;
    return name == "1" ? p.coeff.str() : p.coeff.str() + "*" + name;
  };
  if (json) {
    Json sq = Json::array();
    for (const auto& s : squares) sq.push_back(s.str());
    Json blades = Json::array();
    for (Blade b = 0; b < dim; ++b) blades.push_back(blade_name(b));
    Json rows = Json::array();
    for (const auto& row : table) {
      Json r = Json::array();
      for (const auto& cell : row) r.push_back(Json{{"coeff", cell.coeff.str()}, {"blade", blade_name(cell.blade)}});
      rows.push_back(std::move(r));
    }
    out << Json{{"squares", sq}, {"dimension", dim}, {"blades", blades}, {"table", rows}}.dump()
        << "\n";
    return kExitOk;
  }
  std::vector<std::vector<std::string>> cells(dim + 1, std::vector<std::string>(dim + 1));
  cells[0][0] = "*";
  for (Blade b = 0; b < dim; ++b) {
    cells[0][b + 1] = blade_name(b);
    cells[b + 1][0] = blade_name(b);
    for (Blade c = 0; c < dim; ++c) cells[b + 1][c + 1] = cell_text(table[b][c]);
  }
  std::size_t width = 0;
  for (const auto& row : cells) {
    for (const auto& s : row) width = std::max(width, s.size());
  }
  out << "squares = [";
  for (std::size_t i = 0; i < squares.size(); ++i) out << (i ? ", " : "") << squares[i];
  out << "]\ndimension = " << dim << "\n";
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::string s = row[k];
      if (k + 1 < row.size()) s.resize(width + 2, ' ');
      line += s;
    }
    out << line << "\n";
  }
  return kExitOk;
}

}  // namespace

void print_selftest(const SelftestResult& result, bool json, std::ostream& out) {
  std::size_t passed = 0;
  for (const auto& g : result.groups) {
    if (g.passed) ++passed;
    if (json) {
      Json j{{"group", g.name}, {"status", g.passed ? "PASS" : "FAIL"}};
      if (!g.passed) j["detail"] = g.detail;
      out << j.dump() << "\n";
    } else {
      out << (g.passed ? "PASS " : "FAIL ") << g.name;
      if (!g.passed) out << ": " << g.detail;
      out << "\n";
    }
  }
  if (!json) out << passed << "/" << result.groups.size() << " groups passed\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Fibonacci-quaternion and Clifford algebra classifier", "fibcl"};
  app.require_subcommand(1);

  std::string beta1, beta2, p_text, q_text, x_text, y_text, n_text, squares_text;
  bool json = false;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--beta1", beta1, "first algebra parameter (rational)")->required();
    sub->add_option("--beta2", beta2, "second algebra parameter (rational)")->required();
  };
  auto add_seed = [&](CLI::App* sub) {
    auto* p = sub->add_option("--p", p_text, "Horadam seed h_0 (integer)");
    auto* q = sub->add_option("--q", q_text, "Horadam seed h_1 (integer)");
    p->needs(q);
    q->needs(p);
  };

  auto* classify_cmd = app.add_subcommand("classify", "classify the Clifford algebra of span{F_n, F_n+1}");
  add_params(classify_cmd);
  add_seed(classify_cmd);
  classify_cmd->add_flag("--json", json);

  auto* nprime_cmd = app.add_subcommand("nprime", "certified minimal invertibility threshold");
  add_params(nprime_cmd);
  add_seed(nprime_cmd);
  nprime_cmd->add_flag("--json", json);

  auto* fib_cmd = app.add_subcommand("fib", "n-th Fibonacci number");
  fib_cmd->add_option("--n", n_text, "index")->required();

  auto* mul_cmd = app.add_subcommand("quat-mul", "product of two quaternions in H(beta1,beta2)");
  add_params(mul_cmd);
  mul_cmd->add_option("--x", x_text, "coefficients a1,a2,a3,a4")->required();
  mul_cmd->add_option("--y", y_text, "coefficients b1,b2,b3,b4")->required();

  auto* norm_cmd = app.add_subcommand("quat-norm", "norm of a quaternion in H(beta1,beta2)");
  add_params(norm_cmd);
  norm_cmd->add_option("--x", x_text, "coefficients a1,a2,a3,a4")->required();

  auto* table_cmd = app.add_subcommand("clifford-table", "basis product table of C(diag(squares))");
  table_cmd->add_option("--squares", squares_text, "comma-separated nonzero rationals")->required();
  table_cmd->add_flag("--json", json);

  auto* self_cmd = app.add_subcommand("selftest", "run the embedded identity suite");
  self_cmd->add_flag("--json", json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kGrammar;
    return kExitUsage;
  }

  try {
    std::optional<GenSeed> seed;
    if (!p_text.empty()) seed = GenSeed{int_arg("--p", p_text), int_arg("--q", q_text)};

    if (*classify_cmd) return cmd_classify(params_arg(beta1, beta2), seed, json, out);
    if (*nprime_cmd) return cmd_nprime(params_arg(beta1, beta2), seed, json, out);
    if (*fib_cmd) {
      out << fib(index_arg("--n", n_text)).get_str() << "\n";
      return kExitOk;
    }
    if (*mul_cmd) {
      const AlgebraParams params = params_arg(beta1, beta2);
      out << coeff_list(qmul(quat_arg("--x", x_text, params), quat_arg("--y", y_text, params)))
          << "\n";
      return kExitOk;
    }
    if (*norm_cmd) {
      const AlgebraParams params = params_arg(beta1, beta2);
      out << qnorm(quat_arg("--x", x_text, params)) << "\n";
      return kExitOk;
    }
    if (*table_cmd) return cmd_clifford_table(rat_list("--squares", squares_text), json, out);
    if (*self_cmd) {
      const SelftestResult result = selftest();
      print_selftest(result, json, out);
      return result.all_passed() ? kExitOk : kExitUsage;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n" << kGrammar;
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::Indeterminate ? kExitIndeterminate : kExitUsage;
  }
  err << kGrammar;
  return kExitUsage;
}

}  // namespace fibcl::cli
