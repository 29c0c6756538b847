// Copyright 2026 The hetsearch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "hetsearch/index.hpp"
#include "hetsearch/ingest.hpp"

namespace hetsearch {

/// Settings read from a `key = value` file. Unset keys keep library
/// defaults. Recognized keys: gazetteer, stopwords, do_not_link (paths),
/// tau, stemmer ("porter" | "none"), mode, person_heuristic (true | false).
/// '#' starts a comment; values may be double-quoted.
struct Config {
  std::optional<std::filesystem::path> gazetteer;
  std::optional<std::filesystem::path> stopwords;
  std::optional<std::filesystem::path> do_not_link;
  std::optional<double> tau;
  std::optional<std::string> stemmer;
  std::optional<LoadMode> mode;
  std::optional<bool> person_heuristic;
};

/// Relative paths are resolved against `base_dir`. Throws ParseError with the
/// line on unknown keys or bad values.
Config parse_config(std::istream& in, const std::filesystem::path& base_dir);

/// Throws IoError when the file cannot be read.
Config load_config(const std::filesystem::path& path);

Tokenizer make_tokenizer(const Config& config);

/// Loads the gazetteer and the do-not-link list the config points to.
RegistrationConfig make_registration_config(const Config& config);

/// One label per line; blank lines and '#' comments are skipped.
DoNotLinkSet load_label_list(const std::filesystem::path& path);

}  // namespace hetsearch
