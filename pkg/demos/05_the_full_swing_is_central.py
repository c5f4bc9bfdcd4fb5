# # The swing of all punctures is central
#
# For each pair i, j there is an explicit U with S_ij U = U S_ij = S_A.  The
# swings S_ij generate the pure braid group, so S_A commutes with everything.

# In[1]:

from convexbraid import central_witness, equal, parse
from convexbraid.derivations import swing_as_twists, verify_central_witness

n = 6
for i, j in [(1, 2), (2, 5), (6, 1)]:
    print((i, j), central_witness(i, j, n), verify_central_witness(i, j, n))


# Swings also come apart into twists, peeling one puncture off at a time.

# In[2]:

from convexbraid import PunctureSet

B = PunctureSet(n, [1, 2, 3, 4])
print(swing_as_twists(B))
print(equal(swing_as_twists(B), parse("S{1,2,3,4}", n), n))
