#pragma once

// Included inside an anonymous namespace by each kernel translation unit, so
// every instantiation keeps internal linkage and its own target flags.

template <class Ops>
void eval_lane_blocks(const modloc::circuit::Circuit& c, const std::uint64_t* in, std::size_t blocks,
                      std::uint64_t* out) {
  using modloc::circuit::GateKind;
  using V = typename Ops::V;
  constexpr std::size_t W = Ops::kWords;
  const auto& gates = c.gates();
  const std::size_t width = static_cast<std::size_t>(c.input_width());
  const std::size_t last = static_cast<std::size_t>(c.output());
  std::vector<V> val(last + 1);
  std::vector<V> count;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::uint64_t* base = in + b * width * W;
    for (std::size_t id = 0; id <= last; ++id) {
      const auto& g = gates[id];
      switch (g.kind) {
        case GateKind::Input:
          val[id] = Ops::load(base + (g.param - 1) * W);
          break;
        case GateKind::NegInput:
          val[id] = Ops::bit_not(Ops::load(base + (g.param - 1) * W));
          break;
        case GateKind::Const0:
          val[id] = Ops::zero();
          break;
        case GateKind::Const1:
          val[id] = Ops::ones();
          break;
        case GateKind::And: {
          V acc = Ops::ones();
          for (int a : g.args) acc = Ops::bit_and(acc, val[a]);
          val[id] = acc;
          break;
        }
        case GateKind::Or: {
          V acc = Ops::zero();
          for (int a : g.args) acc = Ops::bit_or(acc, val[a]);
          val[id] = acc;
          break;
        }
        case GateKind::Mod: {
          // count[j] marks the lanes whose running count is j mod p
          const std::size_t p = static_cast<std::size_t>(g.param);
          count.assign(p, Ops::zero());
          count[0] = Ops::ones();
          for (int a : g.args) {
            const V x = val[a];
            const V wrap = count[p - 1];
            for (std::size_t j = p - 1; j > 0; --j)
              count[j] = Ops::bit_or(Ops::and_not(x, count[j]), Ops::bit_and(count[j - 1], x));
            count[0] = Ops::bit_or(Ops::and_not(x, count[0]), Ops::bit_and(wrap, x));
          }
          val[id] = count[0];
          break;
        }
      }
    }
    Ops::store(out + b * W, val[last]);
  }
}
