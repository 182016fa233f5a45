"""Entry point for running as a module: python -m fanalyze"""

from fanalyze.cli import main

if __name__ == "__main__":
    main()
