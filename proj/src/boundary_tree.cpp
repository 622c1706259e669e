#include "ivd/boundary_tree.hpp"

#include "ivd/errors.hpp"

namespace ivd {

std::uint32_t BoundaryForest::next_priority() {
  // splitmix64
  std::uint64_t z = (rng_state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return static_cast<std::uint32_t>((z ^ (z >> 31)) >> 16);
}

NodeId BoundaryForest::make(VertexId v) {
  NodeId id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
  } else {
    id = static_cast<NodeId>(nodes_.size());
    nodes_.emplace_back();
  }
  Node& n = at(id);
  n = Node{};
  n.vertex = v;
  n.priority = next_priority();
  n.live = true;
  return id;
}

void BoundaryForest::release(NodeId n) {
  if (!live(n)) throw StructureError("release of dead boundary node");
  at(n).live = false;
  free_.push_back(n);
}

void BoundaryForest::pull(NodeId n) {
  Node& t = at(n);
  t.size = 1;
  t.marks = t.gamma ? 1 : 0;
  t.heads = t.block != kNoBlock ? 1 : 0;
  if (t.left != kNoNode) {
    const Node& l = node(t.left);
    t.size += l.size;
    t.marks += l.marks;
    t.heads += l.heads;
  }
  if (t.right != kNoNode) {
    const Node& r = node(t.right);
    t.size += r.size;
    t.marks += r.marks;
    t.heads += r.heads;
  }
}

void BoundaryForest::pull_up(NodeId n) {
  for (; n != kNoNode; n = node(n).parent) pull(n);
}

NodeId BoundaryForest::root_of(NodeId n) const {
  while (node(n).parent != kNoNode) n = node(n).parent;
  return n;
}

int BoundaryForest::rank(NodeId n) const {
  int r = size(node(n).left);
  for (NodeId p = node(n).parent; p != kNoNode; n = p, p = node(p).parent) {
    if (node(p).right == n) r += size(node(p).left) + 1;
  }
  return r;
}

NodeId BoundaryForest::select(NodeId root, int k) const {
  NodeId t = root;
  while (t != kNoNode) {
    int ls = size(node(t).left);
    if (k < ls) {
      t = node(t).left;
    } else if (k == ls) {
      return t;
    } else {
      k -= ls + 1;
      t = node(t).right;
    }
  }
  return kNoNode;
}

NodeId BoundaryForest::first(NodeId root) const {
  if (root == kNoNode) return kNoNode;
  while (node(root).left != kNoNode) root = node(root).left;
  return root;
}

NodeId BoundaryForest::last(NodeId root) const {
  if (root == kNoNode) return kNoNode;
  while (node(root).right != kNoNode) root = node(root).right;
  return root;
}

NodeId BoundaryForest::next(NodeId n) const {
  if (node(n).right != kNoNode) return first(node(n).right);
  NodeId p = node(n).parent;
  while (p != kNoNode && node(p).right == n) {
    n = p;
    p = node(p).parent;
  }
  return p;
}

NodeId BoundaryForest::prev(NodeId n) const {
  if (node(n).left != kNoNode) return last(node(n).left);
  NodeId p = node(n).parent;
  while (p != kNoNode && node(p).left == n) {
    n = p;
    p = node(p).parent;
  }
  return p;
}

NodeId BoundaryForest::next_cyclic(NodeId n) const {
  NodeId s = next(n);
  return s != kNoNode ? s : first(root_of(n));
}

NodeId BoundaryForest::prev_cyclic(NodeId n) const {
  NodeId s = prev(n);
  return s != kNoNode ? s : last(root_of(n));
}

std::pair<NodeId, NodeId> BoundaryForest::split(NodeId root, int k) {
  if (root == kNoNode) return {kNoNode, kNoNode};
  at(root).parent = kNoNode;
  int ls = size(node(root).left);
  if (k <= ls) {
    NodeId l = node(root).left;
    if (l != kNoNode) at(l).parent = kNoNode;
    auto [a, b] = split(l, k);
    at(root).left = b;
    if (b != kNoNode) at(b).parent = root;
    pull(root);
    if (a != kNoNode) at(a).parent = kNoNode;
    return {a, root};
  }
  NodeId r = node(root).right;
  if (r != kNoNode) at(r).parent = kNoNode;
  auto [a, b] = split(r, k - ls - 1);
  at(root).right = a;
  if (a != kNoNode) at(a).parent = root;
  pull(root);
  if (b != kNoNode) at(b).parent = kNoNode;
  return {root, b};
}

NodeId BoundaryForest::join(NodeId a, NodeId b) {
  if (a == kNoNode) return b;
  if (b == kNoNode) return a;
  if (node(a).priority > node(b).priority) {
    NodeId r = join(node(a).right, b);
    at(a).right = r;
    at(r).parent = a;
    at(a).parent = kNoNode;
    pull(a);
    return a;
  }
  NodeId l = join(a, node(b).left);
  at(b).left = l;
  at(l).parent = b;
  at(b).parent = kNoNode;
  pull(b);
  return b;
}

NodeId BoundaryForest::insert_after(NodeId pos, NodeId fresh) {
  Node& f = at(fresh);
  f.left = f.right = f.parent = kNoNode;
  pull(fresh);
  NodeId root = root_of(pos);
  auto [a, b] = split(root, rank(pos) + 1);
  return join(join(a, fresh), b);
}

NodeId BoundaryForest::detach(NodeId n) {
  NodeId root = root_of(n);
  int i = rank(n);
  auto [a, bc] = split(root, i);
  auto [mid, c] = split(bc, 1);
  (void)mid;
  return join(a, c);
}

NodeId BoundaryForest::rotate_to_front(NodeId n) {
  NodeId root = root_of(n);
  auto [a, b] = split(root, rank(n));
  return join(b, a);
}

std::pair<NodeId, NodeId> BoundaryForest::cut_range(NodeId first_node, NodeId last_node) {
  NodeId root = root_of(first_node);
  if (root_of(last_node) != root) throw StructureError("cut_range across trees");
  int i = rank(first_node);
  int j = rank(last_node);
  if (i <= j) {
    auto [a, bc] = split(root, i);
    auto [b, c] = split(bc, j - i + 1);
    return {join(a, c), b};
  }
  auto [a, bc] = split(root, j + 1);
  auto [b, c] = split(bc, i - (j + 1));
  return {b, join(c, a)};
}

void BoundaryForest::set_gamma(NodeId n, bool on) {
  if (node(n).gamma == on) return;
  at(n).gamma = on;
  pull_up(n);
}

void BoundaryForest::set_block(NodeId n, BlockId b) {
  if (node(n).block == b) return;
  at(n).block = b;
  pull_up(n);
}

NodeId BoundaryForest::select_flag(NodeId root, int k, bool heads_flag) const {
  NodeId t = root;
  while (t != kNoNode) {
    const Node& x = node(t);
    int l = x.left == kNoNode ? 0 : (heads_flag ? node(x.left).heads : node(x.left).marks);
    int self = heads_flag ? (x.block != kNoBlock) : x.gamma;
    if (k < l) {
      t = x.left;
    } else if (self && k == l) {
      return t;
    } else {
      k -= l + self;
      t = x.right;
    }
  }
  return kNoNode;
}

NodeId BoundaryForest::select_mark(NodeId root, int k) const { return select_flag(root, k, false); }
NodeId BoundaryForest::select_head(NodeId root, int k) const { return select_flag(root, k, true); }

int BoundaryForest::count_before(NodeId n, bool heads_flag) const {
  auto agg = [&](NodeId t) {
    if (t == kNoNode) return 0;
    return heads_flag ? node(t).heads : node(t).marks;
  };
  auto self = [&](NodeId t) { return heads_flag ? int(node(t).block != kNoBlock) : int(node(t).gamma); };
  int c = agg(node(n).left);
  for (NodeId p = node(n).parent; p != kNoNode; n = p, p = node(p).parent) {
    if (node(p).right == n) c += agg(node(p).left) + self(p);
  }
  return c;
}

int BoundaryForest::marks_before(NodeId n) const { return count_before(n, false); }
int BoundaryForest::heads_before(NodeId n) const { return count_before(n, true); }

std::vector<VertexId> BoundaryForest::sequence(NodeId root) const {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(size(root)));
  for_each(root, [&](NodeId n) { out.push_back(node(n).vertex); });
  return out;
}

int BoundaryForest::check_rec(NodeId n, NodeId parent, bool& ok) const {
  if (n == kNoNode) return 0;
  const Node& t = node(n);
  if (!t.live || t.parent != parent) ok = false;
  if (parent != kNoNode && t.priority > node(parent).priority) ok = false;
  int s = 1 + check_rec(t.left, n, ok) + check_rec(t.right, n, ok);
  if (s != t.size) ok = false;
  int m = (t.gamma ? 1 : 0) + marks(t.left) + marks(t.right);
  int h = (t.block != kNoBlock ? 1 : 0) + heads(t.left) + heads(t.right);
  if (m != t.marks || h != t.heads) ok = false;
  return s;
}

bool BoundaryForest::check(NodeId root) const {
  bool ok = node(root).parent == kNoNode;
  check_rec(root, kNoNode, ok);
  return ok;
}

}  // namespace ivd
