"""
Disjoint sets over hashable, orderable items

The representative of a class is its least member.
"""


class UnionFind:
    """Union-find with path compression

    Examples
    --------
    >>> uf = UnionFind()
    >>> uf.union('b', 'c')
    >>> uf.find('c')
    'b'
    """

    def __init__(self, items=()):
        self.parent = {}
        for item in items:
            self.find(item)

    def find(self, x):
        if x not in self.parent:
            self.parent[x] = x
            return x

        if self.parent[x] != x:
            self.parent[x] = self.find(self.parent[x])

        return self.parent[x]

    def union(self, x, y):
        px = self.find(x)
        py = self.find(y)
        self.parent[px] = self.parent[py] = min(px, py)

    def same(self, x, y) -> bool:
        return self.find(x) == self.find(y)

    def classes(self):
        """Mapping representative -> sorted members"""
        groups = {}
        for item in self.parent:
            groups.setdefault(self.find(item), []).append(item)
        return {rep: sorted(members) for rep, members in sorted(groups.items())}
