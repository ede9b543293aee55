import { mountApp } from "./app";
import "./styles.css";

mountApp(document.getElementById("app")!);
