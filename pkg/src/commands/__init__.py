# Módulo de comandos da CLI
