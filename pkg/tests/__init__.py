# Testes do solver de dominação total outer-independente
