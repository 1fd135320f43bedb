#include "cfrac/cli/app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "cfrac/cli/certificate_json.hpp"
#include "cfrac/cli/decimal.hpp"
#include "cfrac/expansions.hpp"
#include "cfrac/irrationality.hpp"
#include "cfrac/version.hpp"

namespace cfrac::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string expansion;
  std::string expr;
  std::optional<std::string> x;
  std::optional<std::string> y;
  std::optional<std::size_t> depth;
  std::size_t digits = 0;
  std::string format = "text";
  std::string out_file;
  std::string cert_file;
};

ExactInt parse_int(const std::optional<std::string>& text, const char* flag) {
  if (!text) throw UsageError(std::string("missing ") + flag);
  try {
    return ExactInt::parse(*text);
  } catch (const DomainError&) {
    throw UsageError(std::string(flag) + " expects an integer, got '" + *text + "'");
  }
}

// Integers print bare, everything else as p/q.
std::string plain(const ExactRational& r) {
  return r.is_integer() ? r.num().to_string() : r.to_string();
}

void write_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
    }
    os << line << '\n';
  }
}

int cmd_convergents(const Options& o, std::ostream& os) {
  CfExpansion cf = e_simple_cf();
  std::string label = "e";
  if (o.expansion == "tanh") {
    ExactInt x = parse_int(o.x, "--x");
    ExactInt y = parse_int(o.y, "--y");
    cf = tanh_integer_cf(x, y);
    label = "tanh(" + x.to_string() + "/" + y.to_string() + ")";
  }
  if (!o.depth) throw UsageError("missing --depth");
  if (*o.depth < 1) throw DomainError("--depth must be >= 1");

  std::vector<std::vector<std::string>> rows{{"n", "h_n", "k_n", "value", "decimal", "gap"}};
  Json entries = Json::array();
  ConvergentState s = ConvergentState::initial(cf.a0());
  for (std::size_t n = 1; n <= *o.depth; ++n) {
    ExactRational prev = s.value();
    s = step(s, cf.term(n));
    ExactRational value = s.value();
    ExactRational gap = (value - prev).abs();
    std::string decimal = decimal_preview(value);
    if (o.format == "json") {
      entries.push_back(Json{{"n", n},
                             {"h", plain(s.h_curr)},
                             {"k", plain(s.k_curr)},
                             {"value", value.to_string()},
                             {"decimal", decimal},
                             {"gap", gap.to_string()}});
    } else {
      rows.push_back({std::to_string(n), plain(s.h_curr), plain(s.k_curr), value.to_string(),
                      decimal, gap.to_string()});
    }
  }
  if (o.format == "json") {
    Json j{{"expansion", label}, {"a0", cf.a0().to_string()}, {"convergents", entries}};
    os << j.dump(2) << '\n';
  } else {
    os << "# convergents of " << label << " (a_0 = " << plain(cf.a0()) << ")\n";
    write_table(os, rows);
  }
  return kExitOk;
}

int cmd_digits(const Options& o, std::ostream& os) {
  ExactInt x = parse_int(o.x, "--x");
  ExactInt y = parse_int(o.y, "--y");
  DigitExpr expr = o.expr == "tanh" ? DigitExpr::Tanh : DigitExpr::Exp;
  CertifiedDigits d = certified_digits(expr, x, y, o.digits);
  if (o.format == "json") {
    Json j{{"expr", o.expr},
           {"x", x.to_string()},
           {"y", y.to_string()},
           {"digits", d.digits.str()},
           {"guaranteedDigits", d.digits.guaranteed_digits},
           {"cfDepth", d.approximation.depth},
           {"errorBound", d.approximation.error_bound.to_string()}};
    os << j.dump(2) << '\n';
  } else {
    os << d.digits.str() << '\n'
       << "guaranteed digits: " << d.digits.guaranteed_digits << '\n'
       << "cf depth: " << d.approximation.depth << '\n';
  }
  return kExitOk;
}

std::string statement(const IrrationalityCertificate& c) {
  if (c.verdict == Verdict::NotApplicable) {
    return "x = 0: tanh(0) = 0 and e^0 = 1 are rational; nothing to certify";
  }
  std::string rx = c.reduced_x.abs().to_string();
  std::string ry = c.reduced_y.to_string();
  std::string r = c.reduced_x.to_string() + "/" + ry;
  std::string sq = (c.reduced_x.abs() * c.reduced_x.abs()).to_string();
  return "tanh(" + r + ") and e^(" + r + ") are irrational: every term of " + rx + "/(" + ry +
         " + " + sq + "/(3*" + ry + " + " + sq + "/(5*" + ry +
         " + ...))) is a positive integer and a_i > b_i for every i > " +
         std::to_string(c.tail_index);
}

int cmd_certify(const Options& o, std::ostream& os) {
  ExactInt x = parse_int(o.x, "--x");
  ExactInt y = parse_int(o.y, "--y");
  IrrationalityCertificate cert = certify_irrational(x, y);
  if (o.format == "json") {
    os << certificate_to_json(cert);
    return kExitOk;
  }
  os << "verdict: " << to_string(cert.verdict) << '\n'
     << "x: " << cert.x << '\n'
     << "y: " << cert.y << '\n'
     << "reduced: " << cert.reduced_x << "/" << cert.reduced_y << '\n';
  if (cert.verdict == Verdict::CertifiedIrrational) {
    os << "tail index: " << cert.tail_index << '\n'
       << "threshold index: " << cert.closed_form.threshold_index << '\n'
       << "checked prefix depth: " << cert.checked_prefix_depth << '\n';
  }
  os << "statement: " << statement(cert) << '\n' << "engine: " << cert.engine_version << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& os, std::ostream& err) {
  std::ifstream in(o.cert_file);
  if (!in) throw UsageError("cannot read certificate file '" + o.cert_file + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  IrrationalityCertificate cert = certificate_from_json(text);

  std::size_t depth = o.depth.value_or(2 * cert.checked_prefix_depth);
  VerificationReport report = verify_certificate(cert, depth);
  if (o.format == "json") {
    Json j{{"valid", report.ok}, {"depth", depth}, {"reason", report.reason}};
    j["violatingIndex"] = report.violating_index ? Json(*report.violating_index) : Json(nullptr);
    os << j.dump(2) << '\n';
  } else if (report.ok) {
    os << "valid: " << to_string(cert.verdict) << " for x=" << cert.x << ", y=" << cert.y
       << " (checked to depth " << depth << ")\n";
  } else {
    os << "invalid\n";
  }
  if (!report.ok) {
    err << "verification failed";
    if (report.violating_index) err << " at index " << *report.violating_index;
    err << ": " << report.reason << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized continued fractions: convergents, certified digits and "
               "irrationality certificates for tanh(x/y) and e^(x/y)",
               "cfrac"};
  app.set_version_flag("--version", std::string(kEngineVersion));
  app.require_subcommand(1);

  Options o;
  const std::vector<std::string> formats{"text", "json"};

  auto* conv = app.add_subcommand("convergents", "Table of convergents h_n/k_n");
  conv->add_option("--expansion", o.expansion, "Expansion: e or tanh")
      ->required()
      ->check(CLI::IsMember({"e", "tanh"}));
  conv->add_option("--x", o.x, "Numerator of the tanh argument");
  conv->add_option("--y", o.y, "Denominator of the tanh argument");
  conv->add_option("--depth", o.depth, "Number of convergents")->required();

  auto* digits = app.add_subcommand("digits", "Certified truncated decimal digits");
  digits->add_option("--expr", o.expr, "Expression: exp or tanh")
      ->required()
      ->check(CLI::IsMember({"exp", "tanh"}));
  digits->add_option("--x", o.x, "Numerator of the argument")->required();
  digits->add_option("--y", o.y, "Denominator of the argument")->required();
  digits->add_option("--digits", o.digits, "Fractional digits to certify")->required();

  auto* certify = app.add_subcommand("certify", "Emit an irrationality certificate");
  certify->add_option("--x", o.x, "Numerator of the argument")->required();
  certify->add_option("--y", o.y, "Denominator of the argument")->required();

  auto* verify = app.add_subcommand("verify", "Re-check a JSON certificate");
  verify->add_option("certificate", o.cert_file, "Certificate file")->required();
  verify->add_option("--depth", o.depth, "Terms to rescan (default: 2x checked prefix)");

  for (auto* sub : {conv, digits, certify, verify}) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", o.out_file, "Write output to FILE instead of stdout");
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  std::ostringstream data;
  int code = kExitOk;
  try {
    if (app.got_subcommand(conv)) code = cmd_convergents(o, data);
    else if (app.got_subcommand(digits)) code = cmd_digits(o, data);
    else if (app.got_subcommand(certify)) code = cmd_certify(o, data);
    else code = cmd_verify(o, data, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CertificateFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  if (o.out_file.empty()) {
    out << data.str();
  } else {
    std::ofstream file(o.out_file, std::ios::binary);
    file << data.str();
    if (!file) {
      err << "error: cannot write '" << o.out_file << "'\n";
      return kExitDomain;
    }
  }
  return code;
}

}  // namespace cfrac::cli
