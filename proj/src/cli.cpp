// Copyright 2026 The tame-certify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tame/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tame/certificate_io.hpp"
#include "tame/coh_dims.hpp"
#include "tame/error.hpp"
#include "tame/kummer.hpp"
#include "tame/seeker.hpp"

namespace tame::cli {

namespace {

std::string render(const std::vector<u64>& primes) {
  std::string out = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    out += (i ? "," : "") + std::to_string(primes[i]);
  }
  return out + "}";
}

struct CommonArgs {
  u64 p = 0;
  std::string S;
  std::string T;
  std::string format = "text";
};

MarkedSetup setup_from(const CommonArgs& args, std::vector<u64> avoid = {}) {
  std::vector<u64> S, T;
  for (auto x : parse_prime_list(args.S)) S.push_back(x);
  for (auto x : parse_prime_list(args.T)) T.push_back(x);
  return make_setup(args.p, std::move(S), std::move(T), std::move(avoid));
}

int cmd_dims(const CommonArgs& args, std::ostream& out) {
  const auto setup = setup_from(args);
  const auto h = h_vector(setup);
  const auto chi = euler_char(setup);
  const bool euler_ok = h.alternating_sum() == chi;
  const bool excision_ok = excision_check(setup);
  if (args.format == "json") {
    nlohmann::json doc;
    doc["p"] = setup.p;
    doc["S"] = setup.S;
    doc["T"] = setup.T;
    doc["h"] = {h.h0, h.h1, h.h2, h.h3};
    doc["theta"] = h.theta;
    doc["delta"] = h.delta;
    nlohmann::json flags = nlohmann::json::object();
    for (const auto& [v, d] : h.delta_flags) flags[std::to_string(v)] = d;
    doc["delta_v"] = flags;
    doc["euler_char"] = chi;
    doc["euler_ok"] = euler_ok;
    doc["excision_ok"] = excision_ok;
    out << doc.dump(2) << "\n";
  } else {
    out << "p = " << setup.p << ", S = " << render(setup.S)
        << ", T = " << render(setup.T) << "\n";
    out << "h = (" << h.h0 << "," << h.h1 << "," << h.h2 << "," << h.h3
        << ")\n";
    out << "theta = " << h.theta << ", delta = " << h.delta << "\n";
    out << "delta_v:";
    if (h.delta_flags.empty()) out << " (none)";
    for (const auto& [v, d] : h.delta_flags) out << " " << v << ":" << d;
    out << "\n";
    out << "euler: " << h.alternating_sum() << " = " << chi << " "
        << (euler_ok ? "ok" : "MISMATCH") << "\n";
    out << "excision: " << (excision_ok ? "ok" : "MISMATCH") << "\n";
  }
  return euler_ok && excision_ok ? kOk : kFailed;
}

int cmd_vst(const CommonArgs& args, std::ostream& out) {
  const auto setup = setup_from(args);
  const auto space = v_space(setup);
  if (args.format == "json") {
    nlohmann::json doc;
    doc["p"] = setup.p;
    doc["S"] = setup.S;
    doc["T"] = setup.T;
    doc["dim"] = space.dim();
    doc["generators"] = space.generators;
    doc["basis"] = space.basis;
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "dim V = " << space.dim() << "\n";
  // Each basis vector is an exponent vector on the generators.
  for (const auto& v : space.basis) {
    std::string term;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (!term.empty()) term += " * ";
      term += std::to_string(space.generators[i]);
      if (v[i] != 1) term += "^" + std::to_string(v[i]);
    }
    out << "  " << term << "\n";
  }
  return kOk;
}

std::filesystem::path output_path(const std::string& raw) {
  std::filesystem::path path(raw);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("TAME_CERTIFY_OUTDIR"); dir && *dir) {
      return std::filesystem::path(dir) / path;
    }
  }
  return path;
}

int cmd_certify(const CommonArgs& args, const std::string& avoid_text,
                bool avoid_given, u64 bound, const std::string& out_path,
                std::ostream& out, std::ostream& err) {
  std::vector<u64> avoid;
  for (auto x : parse_prime_list(avoid_text)) avoid.push_back(x);
  const auto probe = setup_from(args);
  if (!avoid_given && !contains(probe.S, args.p)) avoid.push_back(args.p);
  const auto setup = setup_from(args, avoid);

  const auto cert = certify(setup, bound);
  const auto text = serialize(cert);
  if (!out_path.empty()) {
    const auto path = output_path(out_path);
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
      err << "cannot write " << path.string() << "\n";
      return kUsage;
    }
  }
  if (args.format == "json") {
    out << text;
  } else {
    out << "verdict: " << cert.verdict << "\n";
    out << "S0 = " << render(cert.S0) << ", q = " << render(cert.q_list)
        << "\n";
    if (cert.passed()) {
      out << "cup matrix " << cert.matrix.size() << "x"
          << cert.matrix_columns.size() << ", rank " << cert.rank << "\n";
    } else if (cert.failure) {
      out << "failed at " << cert.failure->stage << ": "
          << cert.failure->message << "\n";
    }
  }
  return cert.passed() ? kOk : kFailed;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << "cannot read " << path << "\n";
    return kUsage;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  Certificate cert;
  try {
    cert = parse_certificate(buffer.str());
  } catch (const MalformedCertificate& e) {
    out << "FAIL: malformed certificate: " << e.what() << "\n";
    return kFailed;
  }
  const auto report = verify_report(cert);
  if (report.ok()) {
    out << "OK\n";
    return kOk;
  }
  for (const auto& f : report.failures) out << "FAIL: " << f << "\n";
  return kFailed;
}

}  // namespace

std::vector<unsigned long long> parse_prime_list(const std::string& text) {
  std::vector<unsigned long long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    item = item.substr(first, last - first + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("not a number: '" + item + "'");
    }
    out.push_back(std::stoull(item));
  }
  return out;
}

int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Certificates for mild restricted-ramification groups over Q",
               "tame-certify"};
  app.require_subcommand(1);

  CommonArgs dims_args, vst_args, cert_args;
  auto add_common = [](CLI::App* sub, CommonArgs& a) {
    sub->add_option("--p", a.p, "odd prime")->required();
    sub->add_option("--S", a.S, "comma-separated primes of S");
    sub->add_option("--T", a.T, "comma-separated marked primes");
    sub->add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto* dims = app.add_subcommand("dims", "cohomology dimensions");
  add_common(dims, dims_args);
  auto* vst = app.add_subcommand("vst", "the Kummer group V_S^T");
  add_common(vst, vst_args);

  auto* cert = app.add_subcommand("certify", "search and emit a certificate");
  add_common(cert, cert_args);
  std::string avoid;
  u64 bound = 1000000;
  std::string out_path;
  auto* avoid_opt =
      cert->add_option("--avoid", avoid, "primes excluded from the search");
  cert->add_option("--bound", bound, "largest prime the search may use");
  cert->add_option("-o,--output", out_path, "certificate file");

  auto* ver = app.add_subcommand("verify", "re-check a certificate file");
  std::string verify_path;
  ver->add_option("path", verify_path, "certificate file")->required();

  std::vector<std::string> args(argv.rbegin(),
                                argv.rend() - (argv.empty() ? 0 : 1));
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*dims) return cmd_dims(dims_args, out);
    if (*vst) return cmd_vst(vst_args, out);
    if (*cert) {
      if (bound == 0) throw InvalidSetup("--bound must be positive");
      return cmd_certify(cert_args, avoid, avoid_opt->count() > 0, bound,
                         out_path, out, err);
    }
    if (*ver) return cmd_verify(verify_path, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace tame::cli
