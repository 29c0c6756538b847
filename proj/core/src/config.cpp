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
#include "hetsearch/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>

#include "hetsearch/error.hpp"
#include "hetsearch/stemmer.hpp"

namespace hetsearch {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string unquote(std::string v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return v.substr(1, v.size() - 2);
  return v;
}

// Strips a '#' comment that is not inside double quotes.
std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

}  // namespace

Config parse_config(std::istream& in, const std::filesystem::path& base_dir) {
  Config c;
  std::string raw;
  std::size_t line_no = 0;
  auto resolve = [&](const std::string& v) {
    std::filesystem::path p(v);
    return p.is_absolute() ? p : base_dir / p;
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", line_no);
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = unquote(trim(std::string_view(line).substr(eq + 1)));

    if (key == "gazetteer") {
      c.gazetteer = resolve(value);
    } else if (key == "stopwords") {
      c.stopwords = resolve(value);
    } else if (key == "do_not_link") {
      c.do_not_link = resolve(value);
    } else if (key == "tau") {
      double tau = 0.0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), tau);
      if (ec != std::errc{} || ptr != value.data() + value.size() || tau <= 0.0 || tau > 1.0) {
        throw ParseError("tau must be a number in (0, 1]", line_no);
      }
      c.tau = tau;
    } else if (key == "stemmer") {
      if (value != "porter" && value != "none") {
        throw ParseError("stemmer must be porter or none", line_no);
      }
      c.stemmer = value;
    } else if (key == "mode") {
      const auto mode = parse_load_mode(value);
      if (!mode) throw ParseError("unknown loading mode '" + value + "'", line_no);
      c.mode = *mode;
    } else if (key == "person_heuristic") {
      if (value != "true" && value != "false") {
        throw ParseError("person_heuristic must be true or false", line_no);
      }
      c.person_heuristic = value == "true";
    } else {
      throw ParseError("unknown key '" + key + "'", line_no);
    }
  }
  return c;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config " + path.string());
  return parse_config(in, path.parent_path());
}

Tokenizer make_tokenizer(const Config& config) {
  StopwordSet stopwords =
      config.stopwords ? Tokenizer::load_stopwords(*config.stopwords) : Tokenizer::default_stopwords();
  return Tokenizer(std::move(stopwords), make_stemmer(config.stemmer.value_or("porter")));
}

RegistrationConfig make_registration_config(const Config& config) {
  RegistrationConfig rc;
  if (config.mode) rc.mode = *config.mode;
  if (config.tau) rc.tau = *config.tau;
  if (config.gazetteer) rc.gazetteer = Gazetteer::load(*config.gazetteer);
  if (config.do_not_link) rc.do_not_link = load_label_list(*config.do_not_link);
  if (config.person_heuristic) rc.extractor.person_heuristic = *config.person_heuristic;
  return rc;
}

DoNotLinkSet load_label_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  DoNotLinkSet out;
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    out.insert(line);
  }
  return out;
}

}  // namespace hetsearch
