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

#include <memory>
#include <string>
#include <string_view>

namespace hetsearch {

class Stemmer {
 public:
  virtual ~Stemmer() = default;
  virtual std::string stem(std::string_view word) const = 0;
  virtual std::string_view name() const = 0;
};

/// Martin Porter's 1980 suffix-stripping algorithm. Words that are not plain
/// lowercase ASCII letters are returned unchanged.
class PorterStemmer final : public Stemmer {
 public:
  std::string stem(std::string_view word) const override;
  std::string_view name() const override { return "porter"; }
};

class IdentityStemmer final : public Stemmer {
 public:
  std::string stem(std::string_view word) const override { return std::string(word); }
  std::string_view name() const override { return "none"; }
};

/// "porter" or "none". Throws std::invalid_argument otherwise.
std::shared_ptr<const Stemmer> make_stemmer(std::string_view name);

}  // namespace hetsearch
