def main():
    from .cli import run

    raise SystemExit(run())


if __name__ == "__main__":
    main()
