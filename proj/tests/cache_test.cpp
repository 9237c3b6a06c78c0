// Copyright 2026 The l2alex Authors.
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

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "l2alex/cache.hpp"

namespace l2alex {
namespace {

namespace fs = std::filesystem;

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("l2alex_cache_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CacheEntry entry(const LinkSpec& s) {
    TorsionResult r = torsion(build_link(s));
    return make_cache_entry(s, r);
  }

  std::size_t line_count() {
    std::ifstream in(dir_ / "c.jsonl");
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) ++n;
    return n;
  }

  fs::path dir_;
};

TEST(Sha256, KnownDigests) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_F(CacheTest, StoreThenLookup) {
  Cache c(dir_ / "c.jsonl");
  CacheEntry a = entry(torus_from_mn(2, 3));
  EXPECT_FALSE(c.lookup(a.key).has_value());
  EXPECT_TRUE(c.store(a));
  EXPECT_EQ(c.lookup(a.key), a);
  Cache fresh(dir_ / "c.jsonl");
  EXPECT_EQ(fresh.lookup(a.key), a);
  EXPECT_FALSE(fresh.lookup(cache_key(hopf())).has_value());
  EXPECT_TRUE(fresh.warnings().empty());
}

TEST_F(CacheTest, StoreIsIdempotent) {
  Cache c(dir_ / "c.jsonl");
  CacheEntry a = entry(Keychain{3});
  c.store(a);
  c.store(a);
  EXPECT_EQ(line_count(), 1u);
  CacheEntry z = entry(Delete{Keychain{2}, 3});
  EXPECT_TRUE(z.torsion.is_zero());
  c.store(z);
  Cache fresh(dir_ / "c.jsonl");
  EXPECT_EQ(fresh.lookup(z.key), z);
  EXPECT_EQ(fresh.size(), 2u);
}

TEST_F(CacheTest, TruncatedLineIsSkipped) {
  {
    Cache c(dir_ / "c.jsonl");
    c.store(entry(torus_from_mn(2, 3)));
    c.store(entry(torus_from_mn(3, 4)));
  }
  std::string text;
  {
    std::ifstream in(dir_ / "c.jsonl");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  // Garbage in the middle and a final record cut short.
  std::string last = to_json(entry(hopf())).dump();
  {
    std::ofstream out(dir_ / "c.jsonl", std::ios::trunc);
    out << "{not json\n" << text << last.substr(0, last.size() / 2);
  }
  Cache c(dir_ / "c.jsonl");
  EXPECT_TRUE(c.lookup(cache_key(torus_from_mn(2, 3))).has_value());
  EXPECT_TRUE(c.lookup(cache_key(torus_from_mn(3, 4))).has_value());
  EXPECT_FALSE(c.lookup(cache_key(hopf())).has_value());
  EXPECT_EQ(c.warnings().size(), 2u);
}

TEST_F(CacheTest, TamperedRecordIsRejected) {
  CacheEntry a = entry(torus_from_mn(2, 5));
  Json j = to_json(a);
  j["link"] = "torus(2,7)";
  fs::create_directories(dir_);
  {
    std::ofstream out(dir_ / "c.jsonl");
    out << j.dump() << '\n';
  }
  Cache c(dir_ / "c.jsonl");
  EXPECT_FALSE(c.lookup(a.key).has_value());
  EXPECT_EQ(c.warnings().size(), 1u);
}

TEST_F(CacheTest, IoErrorsAreNotFatal) {
  fs::create_directories(dir_ / "c.jsonl");  // a directory where the file should be
  Cache c(dir_ / "c.jsonl");
  CacheEntry a = entry(hopf());
  EXPECT_FALSE(c.lookup(a.key).has_value());
  EXPECT_FALSE(c.store(a));
  EXPECT_FALSE(c.warnings().empty());
}

TEST(CachePath, EnvironmentOrder) {
  ::setenv("L2ALEX_CACHE", "/tmp/x/explicit.jsonl", 1);
  EXPECT_EQ(default_cache_path(), fs::path("/tmp/x/explicit.jsonl"));
  ::unsetenv("L2ALEX_CACHE");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  EXPECT_EQ(default_cache_path(), fs::path("/tmp/xdg/l2alex/cache.jsonl"));
  ::unsetenv("XDG_CACHE_HOME");
  ::setenv("HOME", "/tmp/home", 1);
  EXPECT_EQ(default_cache_path(), fs::path("/tmp/home/.cache/l2alex/cache.jsonl"));
}

}  // namespace
}  // namespace l2alex
