// Copyright 2026 The mrcsim Authors
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

#include "mrcsim/cli/regex.h"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mrcsim {
namespace {

constexpr int kEpsilon = -1;

struct Nfa {
  struct Edge {
    int symbol;
    int to;
  };
  std::vector<std::vector<Edge>> edges;

  int Add() {
    edges.emplace_back();
    return static_cast<int>(edges.size()) - 1;
  }
  void Link(int from, int symbol, int to) { edges[from].push_back({symbol, to}); }
};

struct Fragment {
  int start;
  int end;
};

class Parser {
 public:
  Parser(std::string_view text, Nfa& nfa) : text_(text), nfa_(nfa) {}

  Fragment Parse() {
    Fragment f = Alternation();
    if (pos_ != text_.size()) Fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  Fragment Alternation() {
    Fragment left = Concatenation();
    while (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      Fragment right = Concatenation();
      int s = nfa_.Add();
      int e = nfa_.Add();
      nfa_.Link(s, kEpsilon, left.start);
      nfa_.Link(s, kEpsilon, right.start);
      nfa_.Link(left.end, kEpsilon, e);
      nfa_.Link(right.end, kEpsilon, e);
      left = {s, e};
    }
    return left;
  }

  Fragment Concatenation() {
    int s = nfa_.Add();
    Fragment whole{s, s};
    while (pos_ < text_.size() && text_[pos_] != '|' && text_[pos_] != ')') {
      Fragment next = Starred();
      nfa_.Link(whole.end, kEpsilon, next.start);
      whole.end = next.end;
    }
    return whole;
  }

  Fragment Starred() {
    Fragment f = Atom();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      int s = nfa_.Add();
      int e = nfa_.Add();
      nfa_.Link(s, kEpsilon, f.start);
      nfa_.Link(s, kEpsilon, e);
      nfa_.Link(f.end, kEpsilon, f.start);
      nfa_.Link(f.end, kEpsilon, e);
      f = {s, e};
    }
    return f;
  }

  Fragment Atom() {
    char c = text_[pos_];
    if (c == '0' || c == '1') {
      ++pos_;
      int s = nfa_.Add();
      int e = nfa_.Add();
      nfa_.Link(s, c - '0', e);
      return {s, e};
    }
    if (c == '(') {
      ++pos_;
      Fragment inner = Alternation();
      if (pos_ >= text_.size() || text_[pos_] != ')') Fail("missing ')'");
      ++pos_;
      return inner;
    }
    Fail("unexpected '" + std::string(1, c) + "'");
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw std::invalid_argument("regex: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  Nfa& nfa_;
  std::size_t pos_ = 0;
};

std::set<int> Closure(const Nfa& nfa, std::set<int> states) {
  std::vector<int> stack(states.begin(), states.end());
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (const auto& e : nfa.edges[s]) {
      if (e.symbol == kEpsilon && states.insert(e.to).second) stack.push_back(e.to);
    }
  }
  return states;
}

}  // namespace

Dfa CompileRegex(std::string_view pattern) {
  Nfa nfa;
  Fragment f = Parser(pattern, nfa).Parse();

  std::map<std::set<int>, StateId> ids;
  std::vector<std::set<int>> subsets;
  auto intern = [&](std::set<int> subset) {
    auto [it, fresh] = ids.emplace(subset, static_cast<StateId>(subsets.size()));
    if (fresh) subsets.push_back(std::move(subset));
    return it->second;
  };
  intern(Closure(nfa, {f.start}));
  std::vector<StateId> transitions;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (int symbol : {0, 1}) {
      std::set<int> moved;
      for (int s : subsets[i]) {
        for (const auto& e : nfa.edges[s]) {
          if (e.symbol == symbol) moved.insert(e.to);
        }
      }
      StateId target = intern(Closure(nfa, std::move(moved)));
      transitions.push_back(target);
    }
  }
  std::vector<bool> accepting;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    accepting.push_back(subsets[i].count(f.end) > 0);
    names.push_back("d" + std::to_string(i));
  }
  return Dfa(subsets.size(), "01", std::move(transitions), 0, std::move(accepting),
             std::move(names));
}

}  // namespace mrcsim
