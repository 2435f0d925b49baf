// Copyright 2026 The Butson Bent Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "butson/io.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace butson::io {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line; false at end of input.
  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  // Skips blank and '#' lines, returns the first other line.
  std::string header(const std::string& expected) {
    std::string line;
    while (next(line)) {
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return line;
    }
    throw ParseError(number_ + 1, "missing '" + expected + "' header");
  }

  std::vector<long long> integers(const std::string& line) const {
    std::istringstream s(line);
    std::vector<long long> values;
    std::string token;
    while (s >> token) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw ParseError(number_, "not an integer: '" + token + "'");
      values.push_back(v);
    }
    return values;
  }

  std::vector<long long> data_line(std::size_t expected_count, const std::string& what) {
    std::string line;
    if (!next(line)) throw ParseError(number_ + 1, "unexpected end of input, expected " + what);
    auto v = integers(line);
    if (v.size() != expected_count) {
      throw ParseError(number_, "expected " + std::to_string(expected_count) + " entries, got " + std::to_string(v.size()));
    }
    return v;
  }

  void expect_end() {
    std::string line;
    while (next(line)) {
      if (line.find_first_not_of(" \t") != std::string::npos) throw ParseError(number_, "unexpected trailing data");
    }
  }

  int number() const { return number_; }

 private:
  std::istream& in_;
  int number_ = 0;
};

std::vector<long long> parse_header(LineReader& r, const std::string& tag, std::size_t fields) {
  const std::string line = r.header(tag);
  std::istringstream s(line);
  std::string word;
  s >> word;
  if (word != tag) throw ParseError(r.number(), "expected '" + tag + "' header, found '" + word + "'");
  std::string rest;
  std::getline(s, rest);
  auto v = r.integers(rest);
  if (v.size() != fields) throw ParseError(r.number(), "malformed '" + tag + "' header");
  for (long long x : v) {
    if (x < 1 || x > (1 << 24)) throw ParseError(r.number(), "header value out of range: " + std::to_string(x));
  }
  return v;
}

void check_residue(long long v, long long k, int line) {
  if (v < 0 || v >= k) {
    throw ParseError(line, "entry " + std::to_string(v) + " outside [0, " + std::to_string(k) + ")");
  }
}

LogMatrix read_matrix_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    const auto& rows = j.at("rows");
    if (n < 1 || k < 1) throw ParseError(1, "n and k must be positive");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw ParseError(1, "expected " + std::to_string(n) + " rows");
    LogEntries e(n, n);
    for (int i = 0; i < n; ++i) {
      const auto& row = rows.at(static_cast<std::size_t>(i));
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        throw ParseError(1, "row " + std::to_string(i) + ": expected " + std::to_string(n) + " entries");
      }
      for (int c = 0; c < n; ++c) {
        const long long v = row.at(static_cast<std::size_t>(c)).get<long long>();
        check_residue(v, k, 1);
        e(i, c) = static_cast<int>(v);
      }
    }
    return LogMatrix(k, std::move(e));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("malformed matrix JSON: ") + e.what());
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return f;
}

}  // namespace

LogMatrix read_matrix(std::istream& in) {
  in >> std::ws;
  if (in.peek() == '{') return read_matrix_json(in);
  LineReader r(in);
  const auto hdr = parse_header(r, "BH", 2);
  const int n = static_cast<int>(hdr[0]);
  const int k = static_cast<int>(hdr[1]);
  LogEntries e(n, n);
  for (int i = 0; i < n; ++i) {
    const auto row = r.data_line(static_cast<std::size_t>(n), "matrix row " + std::to_string(i + 1));
    for (int c = 0; c < n; ++c) {
      check_residue(row[static_cast<std::size_t>(c)], k, r.number());
      e(i, c) = static_cast<int>(row[static_cast<std::size_t>(c)]);
    }
  }
  r.expect_end();
  return LogMatrix(k, std::move(e));
}

LogMatrix read_matrix_file(const std::string& path) {
  auto f = open_input(path);
  return read_matrix(f);
}

void write_matrix(std::ostream& out, const LogMatrix& m) {
  out << "BH " << m.order() << ' ' << m.phase() << '\n' << to_string(m);
}

void write_matrix_json(std::ostream& out, const LogMatrix& m) {
  nlohmann::json j;
  j["n"] = m.order();
  j["k"] = m.phase();
  j["rows"] = nlohmann::json::array();
  for (int i = 0; i < m.order(); ++i) {
    std::vector<int> row(m.entries().row(i).data(), m.entries().row(i).data() + m.order());
    j["rows"].push_back(row);
  }
  out << j.dump() << '\n';
}

void write_matrix_file(const std::string& path, const LogMatrix& m) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  write_matrix(f, m);
}

LogVector read_vector(std::istream& in) {
  LineReader r(in);
  const auto hdr = parse_header(r, "VEC", 2);
  const int n = static_cast<int>(hdr[0]);
  const int k = static_cast<int>(hdr[1]);
  const auto v = r.data_line(static_cast<std::size_t>(n), "vector entries");
  LogEntryVector e(n);
  for (int i = 0; i < n; ++i) {
    check_residue(v[static_cast<std::size_t>(i)], k, r.number());
    e(i) = static_cast<int>(v[static_cast<std::size_t>(i)]);
  }
  r.expect_end();
  return LogVector(k, std::move(e));
}

LogVector read_vector_file(const std::string& path) {
  auto f = open_input(path);
  return read_vector(f);
}

std::string entries_line(const LogVector& x) {
  std::string s;
  for (int i = 0; i < x.length(); ++i) {
    if (i) s += ' ';
    s += std::to_string(x[i]);
  }
  return s;
}

void write_vector(std::ostream& out, const LogVector& x) {
  out << "VEC " << x.length() << ' ' << x.phase() << '\n' << entries_line(x) << '\n';
}

ZkCode read_code(std::istream& in) {
  LineReader r(in);
  const auto hdr = parse_header(r, "CODE", 3);
  const int n = static_cast<int>(hdr[0]);
  const int k = static_cast<int>(hdr[1]);
  const int size = static_cast<int>(hdr[2]);
  CodeWords w(size, n);
  for (int i = 0; i < size; ++i) {
    const auto row = r.data_line(static_cast<std::size_t>(n), "codeword " + std::to_string(i + 1));
    for (int c = 0; c < n; ++c) {
      check_residue(row[static_cast<std::size_t>(c)], k, r.number());
      w(i, c) = static_cast<int>(row[static_cast<std::size_t>(c)]);
    }
  }
  r.expect_end();
  return ZkCode(n, k, w);
}

void write_code(std::ostream& out, const ZkCode& c) {
  out << "CODE " << c.length() << ' ' << c.modulus() << ' ' << c.size() << '\n';
  for (int i = 0; i < c.size(); ++i) {
    for (int j = 0; j < c.length(); ++j) out << (j ? " " : "") << c.words()(i, j);
    out << '\n';
  }
}

}  // namespace butson::io
