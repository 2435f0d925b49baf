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

#include "butson/bent.hpp"
#include "butson/bush.hpp"
#include "butson/catalog.hpp"
#include "butson/codes.hpp"
#include "butson/hadamard.hpp"
#include "butson/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace butson {
namespace {

LogMatrix parse(const std::string& text) {
  std::istringstream in(text);
  return io::read_matrix(in);
}

int error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const io::ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(MatrixText, RoundTripEveryConstructor) {
  std::vector<LogMatrix> all{fourier(1), fourier(3), sylvester(3), kronecker(fourier(2), fourier(3)),
                             bush_circulant(5, 2).base(), bush_order4_quaternary().base(), example_bh_4_8(),
                             bush_modify(bush_circulant(3, 2), {2, 0, 1}).matrix};
  for (const auto& m : all) {
    std::ostringstream out;
    io::write_matrix(out, m);
    const LogMatrix back = parse(out.str());
    EXPECT_EQ(back, m);
    EXPECT_EQ(verify_hadamard(back), verify_hadamard(m));
    std::ostringstream js;
    io::write_matrix_json(js, m);
    EXPECT_EQ(parse(js.str()), m);
  }
}

TEST(MatrixText, BitExactFormat) {
  std::ostringstream out;
  io::write_matrix(out, fourier(3));
  EXPECT_EQ(out.str(), "BH 3 3\n0 0 0\n0 1 2\n0 2 1\n");
}

TEST(MatrixText, CommentsBeforeHeader) {
  EXPECT_EQ(parse("# a comment\n\n#another\nBH 2 2\n0 0\n0 1\n"), fourier(2));
}

TEST(MatrixText, Diagnostics) {
  EXPECT_EQ(error_line("BH 2 2\n0 0\n0 x\n"), 3);
  EXPECT_EQ(error_line("# c\nXX 2 2\n0 0\n0 1\n"), 2);
  EXPECT_EQ(error_line("BH 2 2\n0 0\n0 2\n"), 3);
  EXPECT_EQ(error_line("BH 2 2\n0 0 0\n0 1\n"), 2);
  EXPECT_EQ(error_line("BH 2 2\n0 0\n"), 3);
  EXPECT_EQ(error_line("BH 2 2\n0 0\n0 1\n1 1\n"), 4);
  EXPECT_GT(error_line("{\"n\": 2, \"k\": 2, \"rows\": [[0, 0]]}"), 0);
  EXPECT_THROW(io::read_matrix_file("/nonexistent/file.bh"), std::runtime_error);
}

TEST(VectorText, RoundTrip) {
  for (const auto& x : {ksw_vector(3, 2), ksw_vector(2, 4), LogVector(5, std::vector<int>{4, 0, 1})}) {
    std::ostringstream out;
    io::write_vector(out, x);
    std::istringstream in(out.str());
    EXPECT_EQ(io::read_vector(in), x);
  }
  std::ostringstream out;
  io::write_vector(out, LogVector(3, std::vector<int>{0, 1, 2}));
  EXPECT_EQ(out.str(), "VEC 3 3\n0 1 2\n");
  std::istringstream bad("VEC 3 3\n0 1\n");
  EXPECT_THROW(io::read_vector(bad), io::ParseError);
}

TEST(CodeText, RoundTrip) {
  const ZkCode c = reed_muller_1(3, 2);
  std::ostringstream out;
  io::write_code(out, c);
  std::istringstream in(out.str());
  const ZkCode back = io::read_code(in);
  EXPECT_EQ(back.words(), c.words());
  EXPECT_EQ(back.modulus(), 3);
}

}  // namespace
}  // namespace butson
