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

#ifndef BUTSON_IO_HPP
#define BUTSON_IO_HPP

#include "butson/codes.hpp"
#include "butson/log_matrix.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

// Text formats:
//   matrix:  optional '#' comment lines, then "BH <n> <k>", then n rows of n
//            space-separated residues in [0, k)
//   vector:  optional '#' comment lines, then "VEC <n> <k>", then one line of
//            n residues
//   code:    optional '#' comment lines, then "CODE <n> <k> <size>", then
//            <size> words of n symbols
// Matrices may also be JSON: {"n": .., "k": .., "rows": [[..], ..]}.
namespace butson::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

LogMatrix read_matrix(std::istream& in);
LogMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const LogMatrix& m);
void write_matrix_json(std::ostream& out, const LogMatrix& m);
void write_matrix_file(const std::string& path, const LogMatrix& m);

LogVector read_vector(std::istream& in);
LogVector read_vector_file(const std::string& path);
void write_vector(std::ostream& out, const LogVector& x);
/// Entries only, space separated (the second line of the vector format).
std::string entries_line(const LogVector& x);

ZkCode read_code(std::istream& in);
void write_code(std::ostream& out, const ZkCode& c);

}  // namespace butson::io

#endif  // BUTSON_IO_HPP
