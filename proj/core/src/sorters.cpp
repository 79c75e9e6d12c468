#include "pforge/sorters.hpp"

#include <algorithm>
#include <sstream>

namespace pforge {

Perm stack_sort(const Perm& pi) {
  Perm out, st;
  out.reserve(pi.size());
  for (int s : pi) {
    while (!st.empty() && st.back() < s) {
      out.push_back(st.back());
      st.pop_back();
    }
    st.push_back(s);
  }
  while (!st.empty()) {
    out.push_back(st.back());
    st.pop_back();
  }
  return out;
}

Perm stack_sort_depth(const Perm& pi, int d) {
  if (d < 1) throw Error(Error::Kind::invalid_input, "stack depth must be >= 1");
  if (d == kUnboundedDepth) return stack_sort(pi);
  Perm out, st;
  out.reserve(pi.size());
  const int cap = d - 1;  // the stack proper; one extra pass-through slot
  for (int s : pi) {
    if (!st.empty() && st.back() < s) {
      while (!st.empty() && st.back() < s) {
        out.push_back(st.back());
        st.pop_back();
      }
      st.push_back(s);
    } else if (static_cast<int>(st.size()) < cap) {
      st.push_back(s);
    } else {
      out.push_back(s);  // bypass a full stack
    }
  }
  while (!st.empty()) {
    out.push_back(st.back());
    st.pop_back();
  }
  return out;
}

Word stack_sort_depth_rec(const Word& w, int d) {
  if (d < 1) throw Error(Error::Kind::invalid_input, "stack depth must be >= 1");
  if (w.empty()) return {};
  if (d == 1) return w;
  const auto it = std::max_element(w.begin(), w.end());
  Word alpha(w.begin(), it), beta(it + 1, w.end());
  Word out = stack_sort_depth_rec(alpha, d);
  const Word tail =
      stack_sort_depth_rec(beta, d == kUnboundedDepth ? d : d - 1);
  out.insert(out.end(), tail.begin(), tail.end());
  out.push_back(*it);
  return out;
}

Perm queue_sort(const Perm& pi) {
  Perm out, q;
  out.reserve(pi.size());
  std::size_t head = 0;
  for (int s : pi) {
    if (head >= q.size() || q.back() < s) {
      q.push_back(s);
    } else {
      while (head < q.size() && q[head] < s) out.push_back(q[head++]);
      out.push_back(s);
    }
  }
  out.insert(out.end(), q.begin() + head, q.end());
  return out;
}

Perm quicksort_pass(const Perm& pi) {
  Perm v = pi;
  auto go = [&](auto&& self, int l, int r) -> void {
    if (l > r) return;
    // Rightmost strong fixed point within the segment: v[t] = t+1 with every
    // earlier segment letter smaller.
    int sfp = -1, running_max = 0;
    for (int t = l; t <= r; ++t) {
      if (v[t] == t + 1 && running_max < v[t]) sfp = t;
      running_max = std::max(running_max, v[t]);
    }
    if (sfp >= 0) {
      self(self, l, sfp - 1);
      self(self, sfp + 1, r);
    } else {
      const int first = v[l];
      Perm smaller, rest;
      for (int t = l; t <= r; ++t) {
        (v[t] < first ? smaller : rest).push_back(v[t]);
      }
      std::copy(rest.begin(), rest.end(),
                std::copy(smaller.begin(), smaller.end(), v.begin() + l));
    }
  };
  go(go, 0, static_cast<int>(v.size()) - 1);
  return v;
}

bool west_sortable(const Perm& pi, int k) {
  if (k < 1) throw Error(Error::Kind::invalid_input, "west_sortable: k must be >= 1");
  Perm cur = pi;
  for (int i = 0; i < k; ++i) cur = stack_sort(cur);
  return is_identity(cur);
}

bool avoids_4312_linear(const Perm& pi) {
  return is_identity(stack_sort(reverse(complement(queue_sort(pi)))));
}

Pipeline parse_pipeline(const std::string& text) {
  Pipeline out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    if (token == "stack") {
      out.push_back({Stage::stack});
    } else if (token == "queue") {
      out.push_back({Stage::queue});
    } else if (token == "rev") {
      out.push_back({Stage::reverse});
    } else if (token == "comp") {
      out.push_back({Stage::complement});
    } else if (token == "qpass") {
      out.push_back({Stage::quicksort_pass});
    } else if (token.rfind("stackd:", 0) == 0) {
      int d = 0;
      try {
        d = std::stoi(token.substr(7));
      } catch (const std::exception&) {
        throw Error(Error::Kind::invalid_input, "bad stack depth in pipeline: " + token);
      }
      if (d < 1) throw Error(Error::Kind::invalid_input, "stack depth must be >= 1");
      out.push_back({Stage::stack_depth, d});
    } else {
      throw Error(Error::Kind::invalid_input, "unknown pipeline stage: " + token);
    }
  }
  return out;
}

Perm apply_stage(const Perm& pi, const PipelineStage& stage) {
  switch (stage.op) {
    case Stage::stack: return stack_sort(pi);
    case Stage::stack_depth: return stack_sort_depth(pi, stage.depth);
    case Stage::queue: return queue_sort(pi);
    case Stage::reverse: return reverse(pi);
    case Stage::complement: return complement(pi);
    case Stage::quicksort_pass: return quicksort_pass(pi);
  }
  throw Error(Error::Kind::invalid_input, "invalid pipeline stage");
}

Perm run_pipeline(const Perm& pi, const Pipeline& pipeline, std::vector<Perm>* trace) {
  Perm cur = pi;
  for (const PipelineStage& stage : pipeline) {
    cur = apply_stage(cur, stage);
    if (trace) trace->push_back(cur);
  }
  return cur;
}

}  // namespace pforge
