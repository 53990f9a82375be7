# coding: utf-8

# # Minimum-distance witnesses on random data
#
# Take the (point, line) pair at minimum distance among all points and all
# lines they span. Its line can hold at most 5 points in C^2 and at most 24 in
# H^2. Random data is in general position, so the witness line usually has 2.

# In[1]:

from collections import Counter

import numpy as np

from sylgal import ScalarField, find_witness, gen_random_points

CF = ScalarField("C", "float")
HF = ScalarField("H", "float")


# In[2]:

for field in (CF, HF):
    sizes = Counter()
    for seed in range(50):
        ps = gen_random_points(20, field, seed)
        w = find_witness(ps)
        assert w.angle_check
        sizes[w.incidence] += 1
    print(field.tag, "witness sizes:", dict(sizes), " bound:", w.bound)


# An exact example, the 3x3 integer grid. In normalized coordinates the
# members of the witness line are further from each other than from the origin.

# In[3]:

from sylgal import Point, PointSet

C = ScalarField("C", "exact")
pts = [Point(C.scalar(a), C.scalar(b)) for a in range(3) for b in range(3)]
w = find_witness(PointSet(C, pts))
print("witness point", w.p, "line", w.line.members, "dist^2", w.dist_sq)
zs = np.array(w.normalized_line_points)[:, :2]
print(zs)
for a in range(len(zs)):
    for b in range(a + 1, len(zs)):
        gap = ((zs[a] - zs[b]) ** 2).sum()
        print(a, b, "gap^2 %.3f  |z_a|^2 %.3f  |z_b|^2 %.3f" % (gap, (zs[a] ** 2).sum(), (zs[b] ** 2).sum()))


# The annotation attached to every witness report:

# In[4]:

print(w.note)
