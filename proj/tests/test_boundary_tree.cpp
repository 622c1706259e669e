#include <gtest/gtest.h>

#include <algorithm>
#include <deque>
#include <random>

#include "ivd/boundary_tree.hpp"

using namespace ivd;

namespace {

NodeId build(BoundaryForest& f, std::vector<NodeId>& ids, int n) {
  NodeId root = kNoNode;
  for (int i = 0; i < n; ++i) {
    NodeId x = f.make(i);
    ids.push_back(x);
    root = f.join(root, x);
  }
  return root;
}

}  // namespace

TEST(BoundaryTree, JoinSplitRank) {
  BoundaryForest f;
  std::vector<NodeId> ids;
  NodeId root = build(f, ids, 100);
  ASSERT_TRUE(f.check(root));
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(f.rank(ids[i]), i);
    EXPECT_EQ(f.select(root, i), ids[i]);
    EXPECT_EQ(f.root_of(ids[i]), root);
  }
  auto [a, b] = f.split(root, 40);
  EXPECT_EQ(f.size(a), 40);
  EXPECT_EQ(f.size(b), 60);
  EXPECT_TRUE(f.check(a));
  EXPECT_TRUE(f.check(b));
  NodeId r = f.join(b, a);
  EXPECT_EQ(f.sequence(r).front(), 40);
  EXPECT_EQ(f.next_cyclic(ids[39]), ids[40]);
  EXPECT_EQ(f.prev_cyclic(ids[40]), ids[39]);
}

TEST(BoundaryTree, CutRangeWraps) {
  BoundaryForest f;
  std::vector<NodeId> ids;
  NodeId root = build(f, ids, 10);
  (void)root;
  auto [rest, range] = f.cut_range(ids[8], ids[1]);
  EXPECT_EQ(f.sequence(range), (std::vector<VertexId>{8, 9, 0, 1}));
  EXPECT_EQ(f.sequence(rest), (std::vector<VertexId>{2, 3, 4, 5, 6, 7}));
  auto [rest2, range2] = f.cut_range(ids[3], ids[5]);
  EXPECT_EQ(f.sequence(range2), (std::vector<VertexId>{3, 4, 5}));
  EXPECT_EQ(f.sequence(rest2), (std::vector<VertexId>{2, 6, 7}));
}

TEST(BoundaryTree, MarksAndHeadsAgainstBruteForce) {
  BoundaryForest f;
  std::vector<NodeId> ids;
  NodeId root = build(f, ids, 200);
  std::mt19937 rng(3);
  std::vector<bool> mark(200), head(200);
  for (int step = 0; step < 2000; ++step) {
    int i = static_cast<int>(rng() % 200);
    if (rng() % 2) {
      mark[i] = !mark[i];
      f.set_gamma(ids[i], mark[i]);
    } else {
      head[i] = !head[i];
      f.set_block(ids[i], head[i] ? i : kNoBlock);
    }
  }
  root = f.root_of(ids[0]);
  ASSERT_TRUE(f.check(root));
  int m = 0, h = 0;
  for (int i = 0; i < 200; ++i) {
    EXPECT_EQ(f.marks_before(ids[i]), m);
    EXPECT_EQ(f.heads_before(ids[i]), h);
    if (mark[i]) EXPECT_EQ(f.select_mark(root, m++), ids[i]);
    if (head[i]) EXPECT_EQ(f.select_head(root, h++), ids[i]);
  }
  EXPECT_EQ(f.marks(root), m);
  EXPECT_EQ(f.heads(root), h);
}

TEST(BoundaryTree, RandomEditsMatchDeque) {
  BoundaryForest f;
  std::vector<NodeId> ids;
  NodeId root = build(f, ids, 5);
  std::vector<NodeId> model = ids;
  std::mt19937 rng(11);
  for (int step = 0; step < 3000; ++step) {
    int op = static_cast<int>(rng() % 3);
    if (op == 0 || model.size() < 3) {
      std::size_t pos = rng() % model.size();
      NodeId x = f.make(1000 + step);
      root = f.insert_after(model[pos], x);
      model.insert(model.begin() + static_cast<long>(pos) + 1, x);
    } else if (op == 1) {
      std::size_t pos = rng() % model.size();
      root = f.detach(model[pos]);
      f.release(model[pos]);
      model.erase(model.begin() + static_cast<long>(pos));
    } else {
      std::size_t pos = rng() % model.size();
      root = f.rotate_to_front(model[pos]);
      std::rotate(model.begin(), model.begin() + static_cast<long>(pos), model.end());
    }
    ASSERT_TRUE(f.check(root));
    ASSERT_EQ(f.size(root), static_cast<int>(model.size()));
  }
  std::vector<VertexId> want;
  for (NodeId n : model) want.push_back(f.node(n).vertex);
  EXPECT_EQ(f.sequence(root), want);
}
