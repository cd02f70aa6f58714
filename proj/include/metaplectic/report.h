// Copyright 2026 The Metaplectic Authors
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

#ifndef METAPLECTIC_REPORT_H
#define METAPLECTIC_REPORT_H

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "metaplectic/linalg.h"

namespace metaplectic {

/// Ordered key=value lines for the machine-readable part of a report.
class KeyValues {
   public:
    void add(const std::string &key, const std::string &value) {
        lines_.emplace_back(key, value);
    }
    void add(const std::string &key, const char *value) {
        add(key, std::string(value));
    }
    void add(const std::string &key, double value) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6e", value);
        add(key, std::string(buf));
    }
    void add(const std::string &key, Complex value) {
        add(key, format_complex(value));
    }
    void add(const std::string &key, long long value) {
        add(key, std::to_string(value));
    }
    void add(const std::string &key, int value) {
        add(key, std::to_string(value));
    }
    void add(const std::string &key, size_t value) {
        add(key, std::to_string(value));
    }
    void add(const std::string &key, bool value) {
        add(key, std::string(value ? "true" : "false"));
    }
    void append(const KeyValues &other, const std::string &prefix = "") {
        for (const auto &[k, v] : other.lines_) {
            lines_.emplace_back(prefix + k, v);
        }
    }

    const std::vector<std::pair<std::string, std::string>> &lines() const {
        return lines_;
    }

    void write(std::ostream &out) const {
        for (const auto &[k, v] : lines_) {
            out << k << '=' << v << '\n';
        }
    }

   private:
    std::vector<std::pair<std::string, std::string>> lines_;
};

}  // namespace metaplectic

#endif
