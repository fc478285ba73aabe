# Dominação total outer-independente em árvores e grafos subdivisão
