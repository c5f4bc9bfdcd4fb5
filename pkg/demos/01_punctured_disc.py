# # Sets of punctures on a convex disc
#
# Punctures sit on a circle, labelled 1..n clockwise.  Almost every object in
# the package is indexed by a set of labels, and what matters about two sets
# is how they sit relative to each other on the circle.

# In[1]:

from pathlib import Path

from convexbraid import ConvexDisc, PunctureSet, admissible, compatible, crossing, nested
from convexbraid.diagram import emit_diagram

disc = ConvexDisc(8)
B = PunctureSet(disc, [1, 2, 3, 5])
C = PunctureSet(disc, [4, 7, 8])
print(B, C, "crossing:", crossing(B, C))


# Crossing means the convex hulls meet.  For points in convex position that is
# the same as the labels interleaving around the circle.

# In[2]:

D = PunctureSet(disc, [1, 2, 3, 4, 8])
E = PunctureSet(disc, [5, 6, 7])
print(D, E, "crossing:", crossing(D, E), "compatible:", compatible(D, E))


# An ordered list of sets is admissible when the sets occupy consecutive arcs
# in that order, reading clockwise.  Rotating the list keeps it admissible;
# swapping two blocks usually does not.

# In[3]:

b, c, d = (PunctureSet(disc, s) for s in ([2, 3, 4], [5, 6], [7, 8, 1]))
for order in ((b, c, d), (c, d, b), (c, b, d)):
    print(order, admissible(order))


# Nested pairs: the union of one pair lies inside a single member of the other.

# In[4]:

pair1 = (PunctureSet(disc, [7, 8, 1, 2, 3]), PunctureSet(disc, [4, 5, 6]))
pair2 = (PunctureSet(disc, [7, 1]), PunctureSet(disc, [2, 3]))
print(nested(pair1, pair2))


# Pictures help.  The SVG below shows the crossing pair from the first cell.

# In[5]:

out = Path("crossing.svg")
out.write_text(emit_diagram(8, [B.members, C.members]))
print("wrote", out)
