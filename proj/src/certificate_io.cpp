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

#include "tame/certificate_io.hpp"

#include <array>
#include <cstdio>
#include <string>

#include <openssl/evp.h>

#include "tame/error.hpp"

namespace tame {

using nlohmann::json;

namespace {

constexpr u64 kMaxSafeInteger = (1ULL << 53);

json encode(u64 v) {
  if (v > kMaxSafeInteger) return std::to_string(v);
  return v;
}

json encode_signed(i64 v) {
  if (v > static_cast<i64>(kMaxSafeInteger) ||
      v < -static_cast<i64>(kMaxSafeInteger)) {
    return std::to_string(v);
  }
  return v;
}

json encode_list(const std::vector<u64>& v) {
  json out = json::array();
  for (u64 x : v) out.push_back(encode(x));
  return out;
}

json encode_rows(const std::vector<FpVector>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(encode_list(r));
  return out;
}

u64 decode(const json& j) {
  if (j.is_number_unsigned()) return j.get<u64>();
  if (j.is_number_integer() && j.get<i64>() >= 0) {
    return static_cast<u64>(j.get<i64>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw MalformedCertificate("bad integer string '" + s + "'");
    }
    return std::stoull(s);
  }
  throw MalformedCertificate("expected a non-negative integer, got " + j.dump());
}

i64 decode_signed(const json& j) {
  if (j.is_number_integer()) return j.get<i64>();
  if (j.is_string()) return std::stoll(j.get<std::string>());
  throw MalformedCertificate("expected an integer, got " + j.dump());
}

std::vector<u64> decode_list(const json& j) {
  if (!j.is_array()) throw MalformedCertificate("expected an array");
  std::vector<u64> out;
  for (const auto& x : j) out.push_back(decode(x));
  return out;
}

std::vector<FpVector> decode_rows(const json& j, u64 p) {
  if (!j.is_array()) throw MalformedCertificate("expected an array of rows");
  std::vector<FpVector> out;
  for (const auto& row : j) {
    out.push_back(decode_list(row));
    for (u64 x : out.back()) {
      if (x >= p) throw MalformedCertificate("F_p entry out of range");
    }
  }
  return out;
}

bool decode_bool(const json& j) {
  if (!j.is_boolean()) throw MalformedCertificate("expected a boolean");
  return j.get<bool>();
}

std::string decode_string(const json& j) {
  if (!j.is_string()) throw MalformedCertificate("expected a string");
  return j.get<std::string>();
}

}  // namespace

json to_json(const Certificate& c) {
  json doc;
  doc["schema"] = c.schema;
  doc["tool_version"] = c.tool_version;
  doc["input"] = {{"p", encode(c.p)},
                  {"S", encode_list(c.S)},
                  {"T", encode_list(c.T)},
                  {"avoid", encode_list(c.avoid)},
                  {"search_bound", encode(c.search_bound)}};
  doc["T0"] = encode_list(c.T0);
  doc["S0"] = encode_list(c.S0);
  doc["kill_sets"] = encode_rows(c.kill_sets);
  doc["S0_enlarged"] = c.S0_enlarged;
  doc["min_size"] = encode(c.min_size);
  doc["q_list"] = encode_list(c.q_list);
  json s = json::object();
  for (const auto& [place, value] : c.s_elements) {
    s[std::to_string(place)] = encode_signed(value);
  }
  doc["s_elements"] = s;
  doc["S_final"] = encode_list(c.S_final);

  json witnesses = json::array();
  for (const auto& w : c.residue_witnesses) {
    witnesses.push_back(
        {{"a", encode_signed(w.a)}, {"l", encode(w.l)}, {"index", encode(w.index)}});
  }
  doc["residue_witnesses"] = witnesses;

  json flags = json::object();
  for (const auto& [place, d] : c.h_vector.delta_flags) {
    flags[std::to_string(place)] = d;
  }
  doc["h_vector"] = {{"h0", c.h_vector.h0},       {"h1", c.h_vector.h1},
                     {"h2", c.h_vector.h2},       {"h3", c.h_vector.h3},
                     {"theta", c.h_vector.theta}, {"delta", c.h_vector.delta},
                     {"delta_flags", flags}};

  doc["characters"] = {{"chi", encode_rows(c.chi)},
                       {"psi", encode_rows(c.psi)},
                       {"eta", encode_rows(c.eta)}};
  doc["cup_matrix"] = {{"columns", encode_list(c.matrix_columns)},
                       {"rows", c.matrix_rows},
                       {"entries", encode_rows(c.matrix)},
                       {"rank", encode(c.rank)}};
  doc["decomposition"] = {{"U", encode_rows(c.U)}, {"V", encode_rows(c.V)}};
  doc["checks"] = {{"v_final_dim", c.checks.v_final_dim},
                   {"ramified", c.checks.ramified},
                   {"surjective", c.checks.surjective},
                   {"block_shape", c.checks.block_shape},
                   {"direct_sum", c.checks.direct_sum},
                   {"mild", c.checks.mild}};
  doc["verdict"] = c.verdict;
  doc["digest"] = c.digest;
  if (c.failure) {
    doc["failure"] = {{"stage", c.failure->stage},
                      {"index", c.failure->index},
                      {"message", c.failure->message}};
  } else {
    doc["failure"] = nullptr;
  }
  return doc;
}

Certificate from_json(const json& doc) {
  try {
    Certificate c;
    c.schema = decode_string(doc.at("schema"));
    c.tool_version = decode_string(doc.at("tool_version"));
    const auto& in = doc.at("input");
    c.p = decode(in.at("p"));
    if (c.p < 3) throw MalformedCertificate("bad modulus");
    c.S = decode_list(in.at("S"));
    c.T = decode_list(in.at("T"));
    c.avoid = decode_list(in.at("avoid"));
    c.search_bound = decode(in.at("search_bound"));

    c.T0 = decode_list(doc.at("T0"));
    c.S0 = decode_list(doc.at("S0"));
    for (const auto& set : doc.at("kill_sets")) c.kill_sets.push_back(decode_list(set));
    c.S0_enlarged = decode_bool(doc.at("S0_enlarged"));
    c.min_size = decode(doc.at("min_size"));
    c.q_list = decode_list(doc.at("q_list"));
    for (const auto& [key, value] : doc.at("s_elements").items()) {
      c.s_elements[decode(json(key))] = decode_signed(value);
    }
    c.S_final = decode_list(doc.at("S_final"));

    for (const auto& w : doc.at("residue_witnesses")) {
      c.residue_witnesses.push_back(
          {decode_signed(w.at("a")), decode(w.at("l")), decode(w.at("index"))});
    }

    const auto& h = doc.at("h_vector");
    c.h_vector.h0 = decode(h.at("h0"));
    c.h_vector.h1 = decode(h.at("h1"));
    c.h_vector.h2 = decode(h.at("h2"));
    c.h_vector.h3 = decode(h.at("h3"));
    c.h_vector.theta = static_cast<int>(decode(h.at("theta")));
    c.h_vector.delta = static_cast<int>(decode(h.at("delta")));
    for (const auto& [key, value] : h.at("delta_flags").items()) {
      c.h_vector.delta_flags[decode(json(key))] = static_cast<int>(decode(value));
    }

    const auto& ch = doc.at("characters");
    c.chi = decode_rows(ch.at("chi"), c.p);
    c.psi = decode_rows(ch.at("psi"), c.p);
    c.eta = decode_rows(ch.at("eta"), c.p);
    const auto& cm = doc.at("cup_matrix");
    c.matrix_columns = decode_list(cm.at("columns"));
    for (const auto& label : cm.at("rows")) c.matrix_rows.push_back(decode_string(label));
    c.matrix = decode_rows(cm.at("entries"), c.p);
    c.rank = decode(cm.at("rank"));
    const auto& dec = doc.at("decomposition");
    c.U = decode_rows(dec.at("U"), c.p);
    c.V = decode_rows(dec.at("V"), c.p);

    const auto& k = doc.at("checks");
    c.checks.v_final_dim = decode(k.at("v_final_dim"));
    c.checks.ramified = decode_bool(k.at("ramified"));
    c.checks.surjective = decode_bool(k.at("surjective"));
    c.checks.block_shape = decode_bool(k.at("block_shape"));
    c.checks.direct_sum = decode_bool(k.at("direct_sum"));
    c.checks.mild = decode_bool(k.at("mild"));

    c.verdict = decode_string(doc.at("verdict"));
    c.digest = decode_string(doc.at("digest"));
    const auto& f = doc.at("failure");
    if (!f.is_null()) {
      c.failure = Failure{decode_string(f.at("stage")), decode(f.at("index")),
                          decode_string(f.at("message"))};
    }
    return c;
  } catch (const json::exception& e) {
    throw MalformedCertificate(e.what());
  } catch (const std::logic_error& e) {
    // std::stoull and friends.
    throw MalformedCertificate(e.what());
  }
}

std::string serialize(const Certificate& cert) {
  return to_json(cert).dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw MalformedCertificate(e.what());
  }
  return from_json(doc);
}

std::string content_digest(const Certificate& cert) {
  Certificate blank = cert;
  blank.digest.clear();
  const std::string text = serialize(blank);
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::string out = "sha256:";
  char hex[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(hex, sizeof hex, "%02x", md[i]);
    out += hex;
  }
  return out;
}

}  // namespace tame
