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

#pragma once

// Canonical JSON form of a Certificate: sorted keys, two-space indent, LF
// line endings, trailing newline. Integers above 2^53 are written as
// decimal strings; both forms are accepted on input.

#include <string>
#include <string_view>

#include <json.hpp>

#include "tame/seeker.hpp"

namespace tame {

nlohmann::json to_json(const Certificate& cert);
// Throws MalformedCertificate on any structural defect. F_p entries must
// lie in [0, p).
Certificate from_json(const nlohmann::json& doc);

std::string serialize(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

// SHA-256 of serialize(cert) with the digest field blanked, as
// "sha256:<64 hex digits>".
std::string content_digest(const Certificate& cert);

}  // namespace tame
