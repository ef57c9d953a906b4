// Copyright 2026 The TFA Workbench Authors
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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <type_traits>

#include <boost/dynamic_bitset.hpp>

namespace tfa {

// Dense indices into the tables of a Unit.
enum class ClassId : std::uint32_t {};
enum class MethodId : std::uint32_t {};  // one per method definition
enum class NameId : std::uint32_t {};    // interned method name
enum class FieldId : std::uint32_t {};   // interned field name
enum class VarIndex : std::uint32_t {};  // canonical variable

template <class E>
  requires std::is_enum_v<E>
constexpr std::size_t index(E e) {
  return static_cast<std::size_t>(e);
}

template <class E>
  requires std::is_enum_v<E>
constexpr E make_id(std::size_t i) {
  return static_cast<E>(static_cast<std::uint32_t>(i));
}

/// A set of classes as a bitset over ClassId. Every set built for one program
/// has the same universe size, so bitwise operations are always well defined.
class ClassSet {
 public:
  ClassSet() = default;
  explicit ClassSet(std::size_t universe) : bits_(universe) {}

  static ClassSet all(std::size_t universe) {
    ClassSet s(universe);
    s.bits_.set();
    return s;
  }
  static ClassSet single(std::size_t universe, ClassId c) {
    ClassSet s(universe);
    s.insert(c);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  bool contains(ClassId c) const { return bits_.test(index(c)); }
  bool insert(ClassId c) {
    if (bits_.test(index(c))) return false;
    bits_.set(index(c));
    return true;
  }
  bool empty() const { return bits_.none(); }
  bool full() const { return bits_.all(); }
  std::size_t size() const { return bits_.count(); }
  bool intersects(const ClassSet& o) const { return bits_.intersects(o.bits_); }
  bool is_subset_of(const ClassSet& o) const { return bits_.is_subset_of(o.bits_); }

  ClassSet& operator|=(const ClassSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  ClassSet& operator&=(const ClassSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  ClassSet& operator-=(const ClassSet& o) {
    bits_ -= o.bits_;
    return *this;
  }
  friend ClassSet operator&(ClassSet a, const ClassSet& b) { return a &= b; }
  friend ClassSet operator|(ClassSet a, const ClassSet& b) { return a |= b; }
  friend ClassSet operator-(ClassSet a, const ClassSet& b) { return a -= b; }
  friend bool operator==(const ClassSet&, const ClassSet&) = default;
  friend bool operator<(const ClassSet& a, const ClassSet& b) { return a.bits_ < b.bits_; }

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos;
         i = bits_.find_next(i)) {
      f(make_id<ClassId>(i));
    }
  }

 private:
  boost::dynamic_bitset<> bits_;
};

}  // namespace tfa
