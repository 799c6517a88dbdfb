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

#include "mrcsim/bsp/cross.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace mrcsim {
namespace {

std::string Fields(std::initializer_list<std::string_view> fields) {
  return EncodeFields(std::span<const std::string_view>(fields.begin(), fields.size()));
}

// A pair together with the provenance that fixes its canonical position:
// the key of the pair it came from, the group that produced that pair, and
// the emission indices along the way.
struct TaggedPair {
  std::string key;
  std::string value;
  std::string source_key;
  std::string source_producer;
  std::uint64_t source_emission = 0;
  std::uint64_t emission = 0;

  auto order() const {
    return std::tie(key, source_key, source_producer, source_emission, emission);
  }
};

class MrcOnBsp : public BspBehavior {
 public:
  explicit MrcOnBsp(MrcProgram program) : program_(std::move(program)) {}

  void Compute(std::span<const Delivered> inbox, ProcessorContext& ctx) const override {
    const std::uint64_t r = (ctx.round() + 1) / 2;
    if (ctx.round() % 2 == 1) {
      MapPhase(inbox, ctx, r);
    } else {
      ReducePhase(inbox, ctx, r);
    }
  }

 private:
  // Resident pairs are (key, value, producer, emission).
  void MapPhase(std::span<const Delivered> inbox, ProcessorContext& ctx, std::uint64_t r) const {
    std::vector<std::vector<std::string>> resident;
    if (r == 1) {
      const std::uint64_t start = PieceStart(ctx.n(), ctx.p(), ctx.processor());
      for (const auto& d : inbox) {
        for (std::size_t k = 0; k < d.payload.size(); ++k) {
          const std::string pos = Dec(start + k);
          resident.push_back({pos, std::string(1, d.payload[k]), "", pos});
        }
      }
      if (ctx.n() == 0 && program_.seed_empty_input && ctx.processor() == 1) {
        resident.push_back({"", "", "", "0"});
      }
    } else {
      for (const auto& d : inbox) resident.push_back(DecodeFields(d.payload));
    }
    for (const auto& u : resident) {
      if (u.size() != 4) throw BehaviorError("malformed resident pair");
      Invocation inv(Phase::kMap, r, ctx.n());
      program_.behavior->Map({u[0], u[1]}, inv);
      ctx.Step(inv.steps());
      ctx.UseWorking(inv.peak_working());
      const auto& out = inv.output();
      for (std::size_t e = 0; e < out.size(); ++e) {
        ctx.Send(KeyOwner(out[e].key, ctx.p()),
                 Fields({out[e].key, out[e].value, u[0], u[2], u[3], Dec(e)}));
      }
    }
  }

  void ReducePhase(std::span<const Delivered> inbox, ProcessorContext& ctx, std::uint64_t r) const {
    std::vector<TaggedPair> pairs;
    pairs.reserve(inbox.size());
    for (const auto& d : inbox) {
      auto f = DecodeFields(d.payload);
      if (f.size() != 6) throw BehaviorError("malformed routed pair");
      pairs.push_back({std::move(f[0]), std::move(f[1]), std::move(f[2]), std::move(f[3]),
                       ParseDec(f[4]), ParseDec(f[5])});
    }
    ctx.Step(pairs.size());
    std::sort(pairs.begin(), pairs.end(),
              [](const TaggedPair& a, const TaggedPair& b) { return a.order() < b.order(); });
    std::vector<KeyValuePair> group;
    for (std::size_t i = 0; i < pairs.size();) {
      std::size_t j = i;
      group.clear();
      while (j < pairs.size() && pairs[j].key == pairs[i].key) {
        group.push_back({pairs[j].key, pairs[j].value});
        ++j;
      }
      Invocation inv(Phase::kReduce, r, ctx.n());
      program_.behavior->Reduce(pairs[i].key, group, inv);
      ctx.Step(inv.steps());
      ctx.UseWorking(inv.peak_working());
      if (inv.flag() == Flag::kAccept) ctx.Accept();
      if (inv.flag() == Flag::kReject) ctx.Reject();
      const auto& out = inv.output();
      for (std::size_t e = 0; e < out.size(); ++e) {
        ctx.Send(ctx.processor(), Fields({out[e].key, out[e].value, pairs[i].key, Dec(e)}));
      }
      i = j;
    }
  }

  MrcProgram program_;
};

class BspOnMrc : public RoundBehavior {
 public:
  explicit BspOnMrc(BspMachine machine) : machine_(std::move(machine)) {}

  void Map(const KeyValuePair& pair, Invocation& inv) const override {
    inv.Step();
    if (inv.round() > 1) {
      inv.Emit(pair.key, pair.value);
      return;
    }
    const std::uint64_t p = machine_.processors;
    if (pair.key.empty() || pair.key == "1") {
      for (std::uint64_t i = 1; i <= p; ++i) {
        inv.Step();
        inv.Emit(Dec(i), "H");
      }
    }
    if (pair.key.empty()) return;
    const std::uint64_t j = ParseDec(pair.key);
    inv.Emit(Dec(PieceOwner(j, inv.n(), p)), "I" + pair.key + ":" + pair.value);
  }

  void Reduce(std::string_view key, std::span<const KeyValuePair> group,
              Invocation& inv) const override {
    const std::uint64_t i = ParseDec(key);
    std::vector<Delivered> inbox;
    if (inv.round() == 1) {
      std::vector<std::pair<std::uint64_t, char>> cells;
      for (const auto& p : group) {
        inv.Step();
        if (p.value.empty() || p.value[0] != 'I') continue;
        auto colon = p.value.find(':');
        cells.emplace_back(ParseDec(std::string_view(p.value).substr(1, colon - 1)), p.value.back());
      }
      std::sort(cells.begin(), cells.end());
      std::string piece;
      for (const auto& c : cells) piece.push_back(c.second);
      inbox.push_back({0, std::move(piece)});
    } else {
      std::vector<std::tuple<std::uint64_t, std::uint64_t, std::string>> received;
      for (const auto& p : group) {
        inv.Step();
        if (p.value.empty() || p.value[0] != 'M') continue;
        auto f = DecodeFields(std::string_view(p.value).substr(1));
        if (f.size() != 3) throw BehaviorError("malformed message record");
        received.emplace_back(ParseDec(f[0]), ParseDec(f[1]), std::move(f[2]));
      }
      std::sort(received.begin(), received.end());
      for (auto& [sender, emission, payload] : received) inbox.push_back({sender, std::move(payload)});
    }
    std::uint64_t inbox_bytes = 0;
    for (const auto& d : inbox) inbox_bytes += d.payload.size();

    std::string scratch;
    ProcessorContext ctx(i, inv.round(), inv.n(), machine_.processors, &scratch);
    machine_.behavior->Compute(inbox, ctx);
    inv.Step(ctx.steps());
    inv.UseWorking(inbox_bytes + ctx.peak_working());
    if (ctx.flag() == Flag::kAccept) inv.Accept();
    if (ctx.flag() == Flag::kReject) inv.Reject();
    inv.Emit(std::string(key), "H");
    const auto& out = ctx.outbox();
    for (std::size_t e = 0; e < out.size(); ++e) {
      if (out[e].dest < 1 || out[e].dest > machine_.processors) {
        throw BehaviorError("processor " + std::string(key) + " sent to nonexistent processor " +
                            std::to_string(out[e].dest));
      }
      inv.Emit(Dec(out[e].dest), "M" + Fields({key, Dec(e), out[e].payload}));
    }
  }

 private:
  BspMachine machine_;
};

}  // namespace

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t KeyOwner(std::string_view key, std::uint64_t p) { return 1 + Fnv1a64(key) % p; }

std::string EncodeFields(std::span<const std::string_view> fields) {
  std::string out;
  for (auto f : fields) {
    out += std::to_string(f.size());
    out.push_back(':');
    out.append(f);
  }
  return out;
}

std::vector<std::string> DecodeFields(std::string_view payload) {
  std::vector<std::string> fields;
  while (!payload.empty()) {
    auto colon = payload.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("field without length");
    const std::uint64_t len = ParseDec(payload.substr(0, colon));
    if (colon + 1 + len > payload.size()) throw std::invalid_argument("truncated field");
    fields.emplace_back(payload.substr(colon + 1, len));
    payload.remove_prefix(colon + 1 + len);
  }
  return fields;
}

BspMachine MrcToBsp(const MrcProgram& program, std::uint64_t p) {
  if (!program.behavior) throw ProgramError("program has no behavior");
  if (program.acceptance != Acceptance::kAcceptState) {
    throw ProgramError("only accept-state programs can run on BSP processors");
  }
  if (p == 0) throw ProgramError("BSP machine needs at least one processor");
  BspMachine machine;
  machine.name = "mrc2bsp:" + program.name;
  machine.processors = p;
  machine.rounds = {SatMul(program.rounds.per_n, 2), SatMul(program.rounds.fixed, 2)};
  machine.behavior = std::make_shared<MrcOnBsp>(program);
  machine.limits = program.limits;
  return machine;
}

MrcProgram BspToMrc(const BspMachine& machine) {
  if (!machine.behavior) throw ProgramError("BSP machine has no behavior");
  if (machine.processors == 0) throw ProgramError("BSP machine needs at least one processor");
  MrcProgram program;
  program.name = "bsp2mrc:" + machine.name;
  program.rounds = machine.rounds;
  program.behavior = std::make_shared<BspOnMrc>(machine);
  program.limits = machine.limits;
  program.seed_empty_input = true;
  return program;
}

std::vector<KeyValuePair> MrcOutputFromBsp(std::span<const Message> output) {
  std::vector<std::tuple<std::string, std::string, std::uint64_t, std::string>> rows;
  for (const auto& m : output) {
    auto f = DecodeFields(m.payload);
    if (f.size() != 4) throw std::invalid_argument("not a resident pair");
    rows.emplace_back(std::move(f[0]), std::move(f[2]), ParseDec(f[3]), std::move(f[1]));
  }
  std::sort(rows.begin(), rows.end());
  std::vector<KeyValuePair> pairs;
  for (auto& [key, producer, emission, value] : rows) pairs.push_back({key, value});
  return pairs;
}

}  // namespace mrcsim
