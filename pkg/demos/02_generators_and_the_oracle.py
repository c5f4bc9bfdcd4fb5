# # Generators, words and deciding equality
#
# Rotations R_B, swings S_B and twists T_{B,C} are written in a small text
# grammar.  Every word expands into Artin generators s1, s2, ... and two
# words are equal as braids exactly when they act the same way on a free
# group.

# In[1]:

from convexbraid import equal, expand_full, is_pure, parse, permutation_of

n = 4
w = parse("R{1,3}", n)
print(w, "->", expand_full(w))


# A rotation of three punctures cycles them; its cube, the swing, returns
# every puncture home, so it is a pure braid.

# In[2]:

r = parse("R{1,2,4}", n)
print(permutation_of(r, n).cycles())
print(is_pure(parse("S{1,2,4}", n), n))


# Rotations split: rotating {4,5,6,7,8,1,2,3} is rotating {4,5,6,7} and then
# {4,8,1,2,3}.

# In[3]:

print(equal(parse("R{1,2,3,4,5,6,7,8}", 8), parse("R{4,5,6,7} R{4,8,1,2,3}", 8), 8))


# A twist is a product of three swings, and the factors may be taken in any
# order.

# In[4]:

t = parse("T{4,5,6}|{7,8,1,2,3}", 8)
for s in ("S{4,5,6}^-1 S{1,2,3,7,8}^-1 S{1,2,3,4,5,6,7,8}",
          "S{1,2,3,4,5,6,7,8} S{4,5,6}^-1 S{1,2,3,7,8}^-1"):
    print(equal(t, parse(s, 8), 8))
